use std::process::{Command, Output};

use p2moduli::io::read_rep;
use p2moduli::{classify, kron_decompose, reduce, ChernData, DimVec2, DimVec3};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p2moduli"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("one JSON object on stdout")
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Value of the first `key: value` line.
fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} line in\n{text}"))
}

#[test]
fn classify_rank_two() {
    let v = json(&["classify", "--rank", "2", "--c1", "0", "--c2", "2", "--json"]);
    assert_eq!(v["depth"], 2);
    assert_eq!(v["matrix_count"], 2);
    assert_eq!(v["rationality"], "Rational");
    assert_eq!(v["chern"]["r"], 2);
    assert_eq!(v["twist"]["t"], 0);
    assert!(v["steps"][0].get("inner").is_some() && v["steps"][0].get("mults").is_some());
}

#[test]
fn classify_without_twist_fails() {
    let out = run(&["classify", "--rank", "1", "--c1", "0", "--c2", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NoValidTwist"));
    assert!(out.stdout.is_empty());
}

#[test]
fn kronecker_trivial_family() {
    let v = json(&["kronecker", "--arrows", "3", "--dim", "2,6", "--json"]);
    assert_eq!(v["verdict"], "MnfTrivial");
    assert_eq!(v["mnf_type"], 2);
    for key in ["side", "m", "mult_low", "mult_high", "dim_low", "dim_high"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn json_reports_rederive() {
    for (r, c1, c2) in [(2, 0, 2), (3, -1, 5), (4, 2, 7), (1, 0, 3)] {
        let args = [r, c1, c2].map(|x: i64| x.to_string());
        let v = json(&["classify", "--rank", &args[0], "--c1", &args[1], "--c2", &args[2], "--json"]);
        let ch = ChernData::new(v["chern"]["r"].as_i64().unwrap(), v["chern"]["c1"].as_i64().unwrap(), v["chern"]["c2"].as_i64().unwrap()).unwrap();
        assert_eq!(v, serde_json::to_value(classify(&ch).unwrap()).unwrap());
    }
    let v = json(&["reduce", "--alpha", "1,4,8", "--json"]);
    let alpha: DimVec3 = v["alpha"].as_str().unwrap().parse().unwrap();
    assert_eq!(v, serde_json::to_value(reduce(alpha).unwrap()).unwrap());
    let v = json(&["kronecker", "--arrows", "3", "--dim", "2,5", "--json"]);
    assert_eq!(v, serde_json::to_value(kron_decompose(3, DimVec2::new(2, 5)).unwrap()).unwrap());
}

#[test]
fn text_and_json_agree() {
    let args = ["classify", "--rank", "3", "--c1", "-1", "--c2", "5"];
    let t = text(&args);
    let v = json(&[&args[..], &["--json"]].concat());
    assert_eq!(field(&t, "depth"), v["depth"].to_string());
    assert_eq!(field(&t, "matrix_size"), v["matrix_size"].to_string());
    assert_eq!(field(&t, "matrix_count"), v["matrix_count"].to_string());
    assert_eq!(field(&t, "rationality"), v["rationality"].as_str().unwrap());
    assert_eq!(field(&t, "twist"), format!("t {}, alpha {}", v["twist"]["t"], v["twist"]["alpha"].as_str().unwrap()));
    assert_eq!(t.lines().filter(|l| l.starts_with("step: ")).count(), v["steps"].as_array().unwrap().len());

    let args = ["kronecker", "--arrows", "4", "--dim", "3,7"];
    let t = text(&args);
    let v = json(&[&args[..], &["--json"]].concat());
    for key in ["mnf_type", "m", "mult_low", "mult_high"] {
        assert_eq!(field(&t, key), v[key].to_string(), "{key}");
    }

    let args = ["chi", "--rank", "2", "--c1", "-1", "--c2", "3", "--twist", "-2"];
    assert_eq!(field(&text(&args), "chi"), json(&[&args[..], &["--json"]].concat())["chi"].to_string());

    let args = ["verify", "--suite", "kronecker", "--trials", "10", "--seed", "7"];
    let t = text(&args);
    let v = json(&[&args[..], &["--json"]].concat());
    assert_eq!(field(&t, "seed"), "7");
    assert_eq!(field(&t, "exact_checks"), v["exact_checks"].to_string());
    assert_eq!(field(&t, "generic_checks"), v["generic_checks"].to_string());
    assert_eq!(field(&t, "result"), if v["pass"] == true { "PASS" } else { "FAIL" });
}

#[test]
fn verify_suites_pass() {
    for suite in ["euler", "kronecker", "reduction", "sheaf"] {
        let v = json(&["verify", "--suite", suite, "--trials", "20", "--json"]);
        assert_eq!(v["pass"], true, "{suite}: {v}");
        assert_eq!(v["seed"], 0);
        assert_eq!(v["prime"], 1009);
    }
}

#[test]
fn classify_with_certification() {
    let v = json(&["classify", "--rank", "2", "--c1", "-1", "--c2", "4", "--verify", "--trials", "20", "--json"]);
    assert_eq!(v["certification"]["certified"], true);
    assert_eq!(v["seed"], 0);
    assert!(v["warnings"].as_array().unwrap().iter().all(|w| !w.as_str().unwrap().contains("endomorphism")));
}

#[test]
fn sample_writes_readable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let out = run(&["sample", "--alpha", "1,4,8", "--seed", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed 3"));
    let r = read_rep(&path).unwrap();
    assert_eq!(r.dim(), DimVec3::new(1, 4, 8));
    r.check_relation().unwrap();

    let again = dir.path().join("again.json");
    run(&["sample", "--alpha", "1,4,8", "--seed", "3", "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--rank", "2"][..],
        &["classify", "--rank", "2", "--c1", "0", "--c2", "2", "--bogus"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "euler", "--prime", "1000"],
        &["reduce", "--alpha", "1,2"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn math_errors_exit_one() {
    let out = run(&["sample", "--alpha", "3,2,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DimensionInfeasible"));
    let out = run(&["verify", "--suite", "euler", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
