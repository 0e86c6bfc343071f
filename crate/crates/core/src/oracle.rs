//! Randomized verification suites. Each trial derives its own seed, samples
//! representations over `F_p` and checks the claims of one module against
//! exact linear algebra.
//!
//! Checks come in two kinds. Exact identities must hold in every trial.
//! Genericity claims (a sampled point lands in the expected open set) may
//! miss on a proper closed subset, so they pass when at least 90% of them
//! hold.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::beilinson::{
    alpha_to_chern, depth_alpha, depth_chern, ext_dims, hom_dim, is_left_general, left_feasible,
    normalize_twist, right_feasible, rep_is_sheaf, sample_general, sample_left_general, BeilinsonRep, ChernData,
};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Prime};
use crate::kronecker::{kron_decompose, kron_sample, KroneckerRep, Verdict};
use crate::quiver::{euler_beilinson, euler_kronecker, gcd, DimVec2, DimVec3};
use crate::reduction::{hypothesis_refuted, reduce, ReductionReport, ReductionState};

/// Minimum fraction of genericity checks that must succeed.
pub const GENERICITY_THRESHOLD: f64 = 0.9;

/// Sample points checked per sheaf test.
pub const SHEAF_POINTS: usize = 20;

/// Pair members larger than this (total dimension) are not sampled.
const PAIR_SAMPLE_LIMIT: u64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Euler,
    Kronecker,
    Reduction,
    Sheaf,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Euler, Suite::Kronecker, Suite::Reduction, Suite::Sheaf];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::Kronecker => "kronecker",
            Suite::Reduction => "reduction",
            Suite::Sheaf => "sheaf",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub prime: Prime,
    pub seed: u64,
    pub trials: usize,
    pub size_cap: u64,
}

impl VerifyConfig {
    pub fn new(suite: Suite, prime: Prime, seed: u64, trials: usize, size_cap: u64) -> Result<Self> {
        if trials == 0 || size_cap == 0 {
            return Err(Error::Parse("trials and size cap must be positive".into()));
        }
        Ok(VerifyConfig {
            suite,
            prime,
            seed,
            trials,
            size_cap,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub kind: CheckKind,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub trials: usize,
    pub exact_checks: u64,
    pub generic_checks: u64,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn exact_failures(&self) -> usize {
        self.failures.iter().filter(|f| f.kind == CheckKind::Exact).count()
    }

    pub fn generic_failures(&self) -> usize {
        self.failures.len() - self.exact_failures()
    }
}

/// Per-trial seed: the splitmix64 finalizer applied to `seed ^ trial`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = (seed ^ trial).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Accumulates check results within one trial.
#[derive(Default)]
struct Tally {
    exact: u64,
    generic: u64,
    failed: Vec<(CheckKind, String)>,
}

impl Tally {
    fn exact(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.exact += 1;
        if !ok {
            self.failed.push((CheckKind::Exact, what()));
        }
    }

    fn generic(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.generic += 1;
        if !ok {
            self.failed.push((CheckKind::Generic, what()));
        }
    }

    /// An unexpected error is an exact failure.
    fn ok<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.exact(false, || format!("{what}: {e}"));
                None
            }
        }
    }
}

fn random_dim3<R: Rng>(rng: &mut R, cap: u64) -> DimVec3 {
    // rejection until one of the two general components is available
    loop {
        let d = DimVec3::new(rng.gen_range(0..=cap), rng.gen_range(0..=cap), rng.gen_range(0..=cap));
        if left_feasible(d) || right_feasible(d) {
            return d;
        }
    }
}

fn euler_trial(field: FieldSpec, cap: u64, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let (d1, d2) = (random_dim3(rng, cap), random_dim3(rng, cap));
    let (Some(mut r), Some(s)) = (
        t.ok(sample_general(d1, field, rng.gen()), "sampling"),
        t.ok(sample_general(d2, field, rng.gen()), "sampling"),
    ) else {
        return;
    };
    // a simple summand keeps the pair away from the general locus
    if rng.gen_bool(0.5) {
        r = r.direct_sum(&BeilinsonRep::simple(field, rng.gen_range(0..3))).expect("same field");
    }
    t.exact(r.check_relation().is_ok() && s.check_relation().is_ok(), || {
        "relation violated by a sample".into()
    });
    let h = hom_dim(&r, &s).expect("same field") as i64;
    let (e1, e2) = ext_dims(&r, &s).expect("same field");
    let chi = euler_beilinson(r.dim(), s.dim());
    t.exact(h - e1 as i64 + e2 as i64 == chi, || {
        format!("hom - ext1 + ext2 = {h} - {e1} + {e2} != {chi} for {} , {}", r.dim(), s.dim())
    });
    t.exact(hom_dim(&BeilinsonRep::simple(field, 2), &s).expect("same field") as u64 == s.dim().c, || {
        format!("hom(S0, R) != dim R(2) for {}", s.dim())
    });
    let p = BeilinsonRep::projective(field, rng.gen_range(0..3));
    t.exact(ext_dims(&p, &s).expect("same field") == (0, 0), || {
        format!("ext from a projective is nonzero for {}", s.dim())
    });
}

fn kronecker_trial(field: FieldSpec, cap: u64, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let u = rng.gen_range(1..=3);
    let d = DimVec2::new(rng.gen_range(0..=cap), rng.gen_range(0..=cap));
    let Some(dec) = t.ok(kron_decompose(u, d), "decomposition") else {
        return;
    };
    if dec.verdict == Verdict::Rigid || (dec.verdict == Verdict::MnfTrivial && !d.is_zero()) {
        t.exact(dec.total() == d, || format!("summands of {d} over Q({u}) add to {}", dec.total()));
        t.exact(gcd(dec.mult_low, dec.mult_high) == d.gcd(), || {
            format!("hcf of multiplicities != hcf{d} over Q({u})")
        });
    }
    let Some(r) = t.ok(kron_sample(u, d, field, rng.gen()), "sampling") else {
        return;
    };
    let predicted = dec.predicted_end_dim(u, d) as usize;
    let end = r.end_dim();
    t.exact(end >= predicted, || format!("End of {d} over Q({u}) is {end} < {predicted}"));
    t.generic(end == predicted, || format!("End of {d} over Q({u}) is {end}, expected {predicted}"));

    let d2 = DimVec2::new(rng.gen_range(0..=cap), rng.gen_range(0..=cap));
    if let Some(s) = t.ok(kron_sample(u, d2, field, rng.gen()), "sampling") {
        let (h, e) = (r.hom_dim(&s).expect("same quiver"), r.ext_dim(&s).expect("same quiver"));
        let chi = euler_kronecker(u, d, d2);
        t.exact(h as i64 - e as i64 == chi, || format!("hom - ext != {chi} for {d}, {d2} over Q({u})"));
    }
    let p0 = KroneckerRep::zero(field, u, DimVec2::new(0, 1));
    let p1 = KroneckerRep::projective_p1(field, u);
    t.exact(p0.hom_dim(&p1).expect("same quiver") == u as usize, || {
        format!("hom(P0, P1) != {u}")
    });
}

/// Samples both members of a reduction pair and checks that they are
/// orthogonal with `t`-dimensional ext¹ from top to socle and no ext².
fn check_pair(state: &ReductionState, field: FieldSpec, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let (s, top) = (state.socle_type, state.top_type);
    if s.total() + top.total() > PAIR_SAMPLE_LIMIT {
        return;
    }
    let (Ok(rs), Ok(rt)) = (sample_general(s, field, rng.gen()), sample_general(top, field, rng.gen())) else {
        return;
    };
    let homs = (hom_dim(&rs, &rt).expect("same field"), hom_dim(&rt, &rs).expect("same field"));
    let ext = ext_dims(&rt, &rs).expect("same field");
    t.generic(homs == (0, 0) && ext == (state.t as usize, 0), || {
        format!(
            "pair ({s}, {top}): hom = {homs:?}, ext(top, socle) = {ext:?}, expected t = {}",
            state.t
        )
    });
}

fn reduction_trial(field: FieldSpec, cap: u64, rng: &mut ChaCha8Rng, t: &mut Tally) {
    // the rank-one moduli vector, whose general point is known to be Schur
    let base = DimVec3::new(0, 2, 5);
    if let Some(r) = t.ok(sample_left_general(base, field, rng.gen()), "sampling") {
        t.exact(hom_dim(&BeilinsonRep::simple(field, 2), &r).expect("same field") == 5, || {
            "hom(S0, R) != 5 for 0,2,5".into()
        });
        let end = r.end_dim();
        t.generic(end == 1, || format!("End of {base} is {end}, expected 1"));
    }
    t.exact(reduce(base).is_ok_and(|r| r.h == 1 && r.matrix_count == Some(2)), || {
        "0,2,5 does not reduce to two 1x1 matrices".into()
    });

    let alpha = loop {
        let b = rng.gen_range(0..=cap);
        let d = DimVec3::new(rng.gen_range(0..=b), b, rng.gen_range(0..=cap));
        if left_feasible(d) {
            break d;
        }
    };
    let refuted = hypothesis_refuted(alpha);
    match reduce(alpha) {
        Ok(rep) => {
            t.exact(rep.h == alpha.gcd(), || format!("h = {} != gcd{alpha}", rep.h));
            for step in &rep.steps {
                t.exact(step.before.total() == alpha, || format!("step state does not add up to {alpha}"));
                if let Some(next) = step.after {
                    t.exact(next.content() == step.before.content(), || {
                        format!("gcd not conserved along {alpha}")
                    });
                }
                check_pair(&step.before, field, rng, t);
            }
        }
        // the engine may stop early only where its hypothesis is refuted
        Err(Error::NonPositiveEuler(_)) if refuted => {}
        Err(e) => t.exact(false, || format!("reduce {alpha}: {e}")),
    }
    let Some(r) = t.ok(sample_left_general(alpha, field, rng.gen()), "sampling") else {
        return;
    };
    t.exact(hom_dim(&BeilinsonRep::simple(field, 2), &r).expect("same field") as u64 == alpha.c, || {
        format!("hom(S0, R) != {} for {alpha}", alpha.c)
    });
    t.generic(is_left_general(&r), || format!("sample of {alpha} not left general"));
    if refuted {
        let end = r.end_dim();
        t.exact(end >= 2, || format!("{alpha} has negative moduli dimension but End = {end}"));
    }
}

fn sheaf_trial(field: FieldSpec, cap: u64, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for i in 0..3 {
        let chk = rep_is_sheaf(&BeilinsonRep::projective(field, i), SHEAF_POINTS, rng.gen());
        if let Some(chk) = t.ok(chk, "sheaf test") {
            t.exact(chk.is_sheaf && chk.fiber_rank == 1, || format!("P({i}) not a line bundle"));
        }
    }
    if let Some(chk) = t.ok(rep_is_sheaf(&BeilinsonRep::simple(field, 0), SHEAF_POINTS, rng.gen()), "sheaf test") {
        t.exact(!chk.is_sheaf, || "vertex-0 simple accepted as a sheaf".into());
    }

    let r = rng.gen_range(1..=cap as i64);
    let c1 = rng.gen_range(-(r as i64)..=r as i64);
    let c2 = rng.gen_range(-2..=3 * cap as i64);
    let ch = ChernData::new(r, c1, c2).expect("positive rank");
    let Ok(tn) = normalize_twist(&ch) else {
        return;
    };
    t.exact(alpha_to_chern(tn.alpha, tn.t) == Ok(ch), || format!("round trip fails for {ch:?}"));
    t.exact(depth_chern(&ch) == depth_alpha(tn.alpha), || format!("depth mismatch for {ch:?}"));
    // Bogomolov: only vectors of actual moduli spaces should give sheaves
    let bogomolov = 2 * r * c2 - (r - 1) * c1 * c1 >= 0;
    let alpha = tn.alpha;
    if !bogomolov || !left_feasible(alpha) || alpha.total() > 6 * cap {
        return;
    }
    let Some(rep) = t.ok(sample_left_general(alpha, field, rng.gen()), "sampling") else {
        return;
    };
    if let Some(chk) = t.ok(rep_is_sheaf(&rep, SHEAF_POINTS, rng.gen()), "sheaf test") {
        t.exact(chk.fiber_rank == r, || format!("fiber rank {} != {r} for {ch:?}", chk.fiber_rank));
        t.generic(chk.is_sheaf, || format!("sample of {alpha} for {ch:?} not a sheaf"));
    }
}

/// Runs `cfg.trials` independent trials (in parallel) and aggregates them
/// in trial order.
pub fn verify_suite(cfg: &VerifyConfig) -> VerifyReport {
    let field = FieldSpec::Prime(cfg.prime);
    let tallies: Vec<(usize, u64, Tally)> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let seed = trial_seed(cfg.seed, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut t = Tally::default();
            match cfg.suite {
                Suite::Euler => euler_trial(field, cfg.size_cap, &mut rng, &mut t),
                Suite::Kronecker => kronecker_trial(field, cfg.size_cap, &mut rng, &mut t),
                Suite::Reduction => reduction_trial(field, cfg.size_cap, &mut rng, &mut t),
                Suite::Sheaf => sheaf_trial(field, cfg.size_cap, &mut rng, &mut t),
            }
            (i, seed, t)
        })
        .collect();
    let mut report = VerifyReport {
        suite: cfg.suite,
        trials: cfg.trials,
        exact_checks: 0,
        generic_checks: 0,
        failures: Vec::new(),
        pass: false,
    };
    for (trial, seed, t) in tallies {
        report.exact_checks += t.exact;
        report.generic_checks += t.generic;
        report.failures.extend(t.failed.into_iter().map(|(kind, description)| Failure {
            trial,
            seed,
            kind,
            description,
        }));
    }
    let misses = report.generic_failures() as f64;
    report.pass = report.exact_failures() == 0
        && misses <= (1.0 - GENERICITY_THRESHOLD) * report.generic_checks as f64;
    report
}

/// Outcome of sampling the general representation of a reduced vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    pub trials: usize,
    pub schur_samples: usize,
    pub pair_checks: usize,
    pub pair_failures: usize,
    pub certified: bool,
}

/// Samples `alpha` to confirm the trivial-endomorphism hypothesis and the
/// orthogonality of every sampled reduction pair; on success the report's
/// hypothesis warning is removed.
pub fn certify_reduction(
    report: &mut ReductionReport,
    prime: Prime,
    seed: u64,
    trials: usize,
) -> Result<Certification> {
    let field = FieldSpec::Prime(prime);
    let alpha = report.alpha;
    let outcomes: Vec<Result<(bool, Tally)>> = (0..trials.max(1))
        .into_par_iter()
        .map(|i| {
            let s = trial_seed(seed, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let r = sample_general(alpha, field, rng.gen())?;
            let mut t = Tally::default();
            for step in &report.steps {
                check_pair(&step.before, field, &mut rng, &mut t);
            }
            Ok((r.end_dim() == 1, t))
        })
        .collect();
    let mut cert = Certification {
        trials: trials.max(1),
        schur_samples: 0,
        pair_checks: 0,
        pair_failures: 0,
        certified: false,
    };
    for o in outcomes {
        let (schur, t) = o?;
        cert.schur_samples += usize::from(schur);
        cert.pair_checks += t.generic as usize;
        cert.pair_failures += t.failed.len();
    }
    let ok = |hits: usize, total: usize| hits as f64 >= GENERICITY_THRESHOLD * total as f64;
    cert.certified = ok(cert.schur_samples, cert.trials)
        && ok(cert.pair_checks - cert.pair_failures, cert.pair_checks);
    if cert.certified {
        report.mark_certified();
    }
    Ok(cert)
}
