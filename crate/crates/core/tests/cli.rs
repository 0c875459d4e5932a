use std::process::Command;

use serde_json::Value;

fn run(args: &[&str], seed_env: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bohrlab"));
    cmd.args(args).env_remove("BOHRLAB_SEED");
    if let Some(seed) = seed_env {
        cmd.env("BOHRLAB_SEED", seed);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args, None);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn radius_envelope_echoes_flags() {
    let (code, v) = json(&["radius", "--codomain", "punctured", "--tol", "1e-10"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "radius");
    assert_eq!(v["params"]["codomain"], "punctured");
    assert_eq!(v["params"]["tol"].as_f64(), Some(1e-10));
    assert_eq!(v["seed"], 7);
    assert_eq!(v["certified"], true);
    let row = &v["rows"][0];
    assert!(row["radius_lo"].as_f64().unwrap() <= 1.0 / 3.0);
    assert!(row["radius_hi"].as_f64().unwrap() >= 1.0 / 3.0);
}

#[test]
fn sharpness_rows_and_absence() {
    let (code, v) = json(&["sharpness", "--codomain", "slit", "--r0", "0.2"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    let at_09 = rows
        .iter()
        .find(|r| (r["c"].as_f64().unwrap() - 0.9).abs() < 0.006)
        .unwrap();
    assert!(at_09["lhs"].as_f64().unwrap() > at_09["rhs"].as_f64().unwrap());

    let (code, v) = json(&["sharpness", "--codomain", "halfplane", "--r0", "0.3"]);
    assert_eq!(code, 3);
    assert!(v["rows"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["radius", "--codomain", "annulus"], None).0, 2);
    assert_eq!(run(&["sharpness", "--codomain", "halfplane", "--r0", "1.5"], None).0, 2);
    assert_eq!(run(&["verify", "--suite", "multidim", "--p", "0.5"], None).0, 2);
    let (code, _, err) = run(&["coeffs", "--family", "exterior", "--a0", "0.5"], None);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn seed_comes_from_flag_or_environment() {
    let (_, out, _) = run(&["verify", "--suite", "caratheodory", "--samples", "20"], Some("42"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 42);
    let (_, out, _) = run(
        &["verify", "--suite", "caratheodory", "--samples", "20", "--seed", "5"],
        Some("42"),
    );
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn seeds_change_the_samples() {
    let a = run(
        &["verify", "--suite", "debranges", "--samples", "30", "--seed", "1"],
        None,
    )
    .1;
    let b = run(
        &["verify", "--suite", "debranges", "--samples", "30", "--seed", "2"],
        None,
    )
    .1;
    assert_ne!(a, b);
}

#[test]
fn coefficient_dump() {
    let (code, out, _) = run(
        &[
            "coeffs",
            "--family",
            "koebe",
            "--a0",
            "1",
            "--max-terms",
            "3",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(code, 0);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "n,re,im,abs");
    let re: Vec<f64> = body[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(re, vec![1.0, 4.0, 8.0, 12.0]);
}

#[test]
fn metric_table() {
    let (code, v) = json(&["metric", "--points", "1,inf,-1"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let one_inf = rows.iter().find(|r| r["z"] == "1" && r["w"] == "inf").unwrap();
    assert_eq!(one_inf["lambda"].as_f64(), Some(std::f64::consts::FRAC_1_SQRT_2));
}

#[test]
fn multidim_single_case() {
    let (code, v) = json(&[
        "verify",
        "--suite",
        "multidim",
        "--dim",
        "4",
        "--p",
        "3",
        "--samples",
        "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["params"]["p"], "3");
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
}
