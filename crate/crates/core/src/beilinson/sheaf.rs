//! Pointwise test that a representation is a sheaf: the three-term complex
//! built from its projective resolution must have homology only at the
//! last term. We evaluate the linear forms at random points of P² and check
//! that both fiber maps have full column rank there.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{BeilinsonRep, KERNEL_PAIRS};
use crate::error::Result;
use crate::exactlin::ExactMat;

/// Outcome of [`rep_is_sheaf`]. `fiber_rank` is `(a + b + c) − 3b` whether
/// or not the test passed; `failing_point` is the first point with a rank
/// drop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafCheck {
    pub is_sheaf: bool,
    pub fiber_rank: i64,
    pub failing_point: Option<[u64; 3]>,
}

/// The two fiber maps at the point `p`:
/// `R0⊗Λ² → R0⊗k³ ⊕ R1⊗k³` and `R0⊗k³ ⊕ R1⊗k³ → R0 ⊕ R1 ⊕ R2`.
pub fn sheaf_fiber_maps(r: &BeilinsonRep, p: [u64; 3]) -> (ExactMat, ExactMat) {
    let f = r.field();
    let (a, b, c) = (r.dim().a as usize, r.dim().b as usize, r.dim().c as usize);
    let coord = |k: usize| p[k] as i64;
    let s = |n: usize, k: usize| ExactMat::scaled_identity(f, n, coord(k));

    let mut first = ExactMat::zeros(f, 3 * a + 3 * b, 3 * a);
    for (col, &(i, j)) in KERNEL_PAIRS.iter().enumerate() {
        let c0 = col * a;
        first.paste(i * a, c0, &s(a, j));
        first.paste(j * a, c0, &s(a, i).neg());
        first.paste(3 * a + j * b, c0, &r.a01()[i]);
        first.paste(3 * a + i * b, c0, &r.a01()[j].neg());
    }

    let mut second = ExactMat::zeros(f, a + b + c, 3 * a + 3 * b);
    for i in 0..3 {
        second.paste(0, i * a, &s(a, i).neg());
        second.paste(a, i * a, &r.a01()[i]);
    }
    for j in 0..3 {
        second.paste(a, 3 * a + j * b, &s(b, j).neg());
        second.paste(a + b, 3 * a + j * b, &r.a12()[j]);
    }
    (first, second)
}

fn random_point<R: Rng>(p: u64, rng: &mut R) -> [u64; 3] {
    loop {
        let pt = [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p)];
        if pt != [0, 0, 0] {
            return pt;
        }
    }
}

/// One-sided probabilistic: a `false` is certain (a rank drop was found), a
/// `true` only says no drop occurred at the `trials` sampled points.
pub fn rep_is_sheaf(r: &BeilinsonRep, trials: usize, seed: u64) -> Result<SheafCheck> {
    let p = r.field().require_prime("the sheaf test needs a prime field")?;
    let d = r.dim();
    let (a, b) = (d.a as usize, d.b as usize);
    let fiber_rank = d.a as i64 + d.c as i64 - 2 * d.b as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials.max(1) {
        let pt = random_point(p.get(), &mut rng);
        let (first, second) = sheaf_fiber_maps(r, pt);
        if first.rank() != 3 * a || second.rank() != 3 * b {
            return Ok(SheafCheck {
                is_sheaf: false,
                fiber_rank,
                failing_point: Some(pt),
            });
        }
    }
    Ok(SheafCheck {
        is_sheaf: true,
        fiber_rank,
        failing_point: None,
    })
}
