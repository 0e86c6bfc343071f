//! Command-line front end: classify Chern data, run the reduction engine,
//! decompose Kronecker dimension vectors, sample representations and run
//! the verification suites.
//!
//! Exit codes: 0 on success, 1 on a mathematical error or a failed
//! verification (the error name goes to stderr), 2 on a usage error.

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use p2moduli::io::{rep_to_json, write_rep};
use p2moduli::{
    certify_reduction, chi_twist, classify, kron_decompose, reduce, sample_general, verify_suite,
    ChernData, DimVec2, DimVec3, Error, FieldSpec, Prime, ReductionReport, ReductionStep, Suite,
    VerifyConfig,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "p2moduli", version, about = "Birational classification of moduli of sheaves on P2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the moduli space for Chern data (r, c1, c2).
    Classify(ClassifyArgs),
    /// Run the two-step reduction on a Beilinson dimension vector.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        alpha: DimVec3,
        #[arg(long)]
        json: bool,
    },
    /// Decompose the general representation of the u-arrow Kronecker quiver.
    Kronecker {
        #[arg(long)]
        arrows: u64,
        #[arg(long)]
        dim: DimVec2,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic of a twist E(j).
    Chi {
        #[command(flatten)]
        chern: ChernArgs,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long)]
        json: bool,
    },
    /// Sample a general representation and write it as JSON.
    Sample {
        #[arg(long)]
        alpha: DimVec3,
        #[arg(long, default_value = "1009", value_parser = parse_prime)]
        prime: Prime,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the representation goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a randomized verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value = "1009", value_parser = parse_prime)]
        prime: Prime,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        size_cap: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ChernArgs {
    #[arg(long)]
    rank: i64,
    #[arg(long, allow_hyphen_values = true)]
    c1: i64,
    #[arg(long, allow_hyphen_values = true)]
    c2: i64,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    chern: ChernArgs,
    #[arg(long)]
    json: bool,
    /// Sample the general representation to confirm the reduction.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value = "1009", value_parser = parse_prime)]
    prime: Prime,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(p).map_err(|e| e.to_string())
}

/// Text-mode output, bold headers unless `NO_COLOR` is set or stdout is not
/// a terminal.
struct Out {
    color: bool,
}

impl Out {
    fn new() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Out {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn field(&self, key: &str, value: impl std::fmt::Display) {
        if self.color {
            println!("\x1b[1m{key}:\x1b[0m {value}");
        } else {
            println!("{key}: {value}");
        }
    }

    fn verdict(&self, pass: bool) {
        let word = if pass { "PASS" } else { "FAIL" };
        match (self.color, pass) {
            (true, true) => self.field("result", format!("\x1b[32m{word}\x1b[0m")),
            (true, false) => self.field("result", format!("\x1b[31m{word}\x1b[0m")),
            _ => self.field("result", word),
        }
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn to_value(v: &impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn step_line(k: usize, s: &ReductionStep) -> String {
    let next = match s.after {
        Some(n) => format!("next inner {}, outer {}^{}", n.inner, n.outer_type, n.outer_mult),
        None => "terminal".into(),
    };
    format!(
        "{k}: inner {}, t {}, socle {}, top {}, verdict {:?}, type {}, mults {},{}; {next}",
        s.before.inner, s.before.t, s.before.socle_type, s.before.top_type, s.verdict, s.mnf_type,
        s.mults[0], s.mults[1]
    )
}

fn print_reduction(out: &Out, r: &ReductionReport) {
    for (k, s) in r.steps.iter().enumerate() {
        out.field("step", step_line(k + 1, s));
    }
    out.field("matrix_size", r.h);
    match r.matrix_count {
        Some(s) => out.field("matrix_count", s),
        None => out.field("matrix_count", "none"),
    }
    for w in &r.warnings {
        out.field("warning", w);
    }
}

fn run(cmd: Command) -> Result<bool, Error> {
    let out = Out::new();
    match cmd {
        Command::Classify(a) => {
            let ch = ChernData::new(a.chern.rank, a.chern.c1, a.chern.c2)?;
            let mut rep = classify(&ch)?;
            let cert = if a.verify {
                Some(certify_reduction(&mut rep.reduction, a.prime, a.seed, a.trials)?)
            } else {
                None
            };
            if a.json {
                let mut v = to_value(&rep);
                if let Some(c) = &cert {
                    v["certification"] = to_value(c);
                    v["seed"] = json!(a.seed);
                    v["prime"] = json!(a.prime.get());
                }
                print_json(&v);
            } else {
                out.field("chern", format!("r {}, c1 {}, c2 {}", ch.r, ch.c1, ch.c2));
                out.field("twist", format!("t {}, alpha {}", rep.twist.t, rep.twist.alpha));
                out.field("depth", rep.depth);
                print_reduction(&out, &rep.reduction);
                out.field("rationality", format!("{:?}", rep.rationality));
                if let Some(c) = &cert {
                    out.field("seed", a.seed);
                    out.field("prime", a.prime);
                    out.field(
                        "certification",
                        format!(
                            "{}/{} samples with trivial End, {}/{} pair checks",
                            c.schur_samples,
                            c.trials,
                            c.pair_checks - c.pair_failures,
                            c.pair_checks
                        ),
                    );
                    out.verdict(c.certified);
                }
            }
            Ok(cert.map_or(true, |c| c.certified))
        }
        Command::Reduce { alpha, json } => {
            let rep = reduce(alpha)?;
            if json {
                print_json(&rep);
            } else {
                out.field("alpha", alpha);
                print_reduction(&out, &rep);
            }
            Ok(true)
        }
        Command::Kronecker { arrows, dim, json } => {
            let d = kron_decompose(arrows, dim)?;
            if json {
                print_json(&d);
            } else {
                out.field("verdict", format!("{:?}", d.verdict));
                out.field("mnf_type", d.mnf_type);
                out.field("side", format!("{:?}", d.side));
                out.field("m", d.m);
                out.field("mult_low", d.mult_low);
                out.field("mult_high", d.mult_high);
                out.field("dim_low", d.dim_low);
                out.field("dim_high", d.dim_high);
                out.field("end_dim_general", d.predicted_end_dim(arrows, dim));
            }
            Ok(true)
        }
        Command::Chi { chern, twist, json } => {
            let ch = ChernData::new(chern.rank, chern.c1, chern.c2)?;
            let chi = chi_twist(&ch, twist);
            if json {
                print_json(&json!({"chern": ch, "twist": twist, "chi": chi}));
            } else {
                out.field("chi", chi);
            }
            Ok(true)
        }
        Command::Sample {
            alpha,
            prime,
            seed,
            out: path,
        } => {
            let r = sample_general(alpha, FieldSpec::Prime(prime), seed)?;
            match path {
                Some(p) => {
                    if let Err(e) = write_rep(&p, &r) {
                        eprintln!("error: Io: {}: {e}", p.display());
                        return Ok(false);
                    }
                    eprintln!("wrote {} (alpha {alpha}, prime {prime}, seed {seed})", p.display());
                }
                None => {
                    eprintln!("alpha {alpha}, prime {prime}, seed {seed}");
                    print!("{}", rep_to_json(&r));
                }
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            prime,
            seed,
            trials,
            size_cap,
            json,
        } => {
            let cfg = VerifyConfig::new(suite, prime, seed, trials, size_cap)?;
            let rep = verify_suite(&cfg);
            if json {
                let mut v = to_value(&rep);
                v["seed"] = json!(seed);
                v["prime"] = json!(prime.get());
                v["size_cap"] = json!(size_cap);
                print_json(&v);
            } else {
                out.field("suite", suite);
                out.field("seed", seed);
                out.field("prime", prime);
                out.field("trials", rep.trials);
                out.field("exact_checks", rep.exact_checks);
                out.field("generic_checks", rep.generic_checks);
                out.field("exact_failures", rep.exact_failures());
                out.field("generic_failures", rep.generic_failures());
                for f in &rep.failures {
                    out.field(
                        "failure",
                        format!("trial {} seed {} ({:?}): {}", f.trial, f.seed, f.kind, f.description),
                    );
                }
                out.verdict(rep.pass);
            }
            Ok(rep.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            // the message already leads with the error name
            debug_assert!(e.to_string().starts_with(e.name()));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
