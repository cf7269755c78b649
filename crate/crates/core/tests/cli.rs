use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzyfrac")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn ghdiff_success() {
    let (code, out, _) = run(&["ghdiff", r#"{"triangular":[12,15,19]}"#, r#"{"triangular":[5,7,10]}"#]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["triangular"], serde_json::json!([7.0, 8.0, 9.0]));
    assert_eq!(v["case"], "case_i");
    assert_eq!(v["grid"].as_array().unwrap().len(), 101);
}

#[test]
fn ghdiff_not_exists() {
    let (code, out, err) = run(&["ghdiff", r#"{"triangular":[12,15,19]}"#, r#"{"triangular":[5,9,11]}"#]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["error"], "not_exists");
    assert_eq!(v["reason"], "lower_not_monotone");
    assert!(err.contains("does not exist"));
}

#[test]
fn approximate_methods() {
    let u = r#"{"triangular":[12,15,19]}"#;
    let v = r#"{"triangular":[5,9,11]}"#;
    let (code, out, _) = run(&["ghdiff", u, v, "--method", "approx", "--alpha", "0.5"]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["cut"]["lower"], 6.0);
    assert_eq!(r["cut"]["upper"], 7.0);
    let (code, _, _) = run(&["ghdiff", u, v, "--method", "lsq", "--grid-n", "2", "--weights", "[1,2,3]"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["ghdiff", u, v, "--method", "lsq", "--grid-n", "2", "--weights", "[1,2]"]);
    assert_eq!(code, 1);
}

#[test]
fn gdiv_domain_error() {
    let (code, out, _) = run(&["gdiv", "1", r#"{"triangular":[-1,1,2]}"#]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["error"], "domain_error");
    let (code, out, _) = run(&["gdiv", "6", "3", "--grid-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["lower"], serde_json::json!([2.0, 2.0, 2.0]));
}

#[test]
fn round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["arith", "add", r#"{"trapezoid":[-0.3,0.1,0.7,3.3]}"#, "0.1", "--grid-n", "7"]);
    assert_eq!(code, 0);
    let path = dir.path().join("u.json");
    std::fs::write(&path, &out).unwrap();
    let (code, again, _) = run(&["arith", "add", path.to_str().unwrap(), "0", "--grid-n", "7"]);
    assert_eq!(code, 0);
    let (a, b) = (json(&out), json(&again));
    assert_eq!(a["lower"], b["lower"]);
    assert_eq!(a["upper"], b["upper"]);
    assert_eq!(a["grid"], b["grid"]);
}

#[test]
fn usage_and_parse_errors_exit_1() {
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["nonsense"]).0, 1);
    assert_eq!(run(&["validate", "{\"triangular\": [1, 2"]).0, 1);
    assert_eq!(run(&["validate", "/no/such/file.json"]).0, 1);
    assert_eq!(run(&["solve", "--f", "nope:1", "--g", "const:1", "--u0", "1"]).0, 1);
    let (code, out, _) = run(&["validate", r#"{"grid":[0,1],"lower":[0,2],"upper":[1,1]}"#]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["report"]["violations"][0]["kind"], "crossing");
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn frac_and_fuzzyfrac() {
    let (code, out, _) = run(&["frac", "rl-integral", "--sample", "const:1", "--order", "0.5"]);
    assert_eq!(code, 0);
    assert!((json(&out)["value"].as_f64().unwrap() - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-6);
    let (code, out, _) = run(&["frac", "gl", "--sample", "power_t:1", "--order", "0.5", "--at", "0"]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["reason"], "singular_at_origin");

    let c = r#"{"triangular":[0,1,2]}"#;
    let (code, out, _) = run(&[
        "fuzzyfrac", "derivative", "--number", c, "--profile", "poly_t:1,-2,1", "--horizon", "2", "--steps", "200",
        "--grid-n", "10", "--at", "50",
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["form"], "form_ii");
    assert_eq!(v["switching_points"].as_array().unwrap().len(), 1);
    let (code, out, _) = run(&[
        "fuzzyfrac", "caputo", "--number", c, "--profile", "poly_t:1,-2,1", "--horizon", "2", "--steps", "200",
        "--grid-n", "10", "--at", "150",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["reason"], "switching_point");
}

#[test]
fn solve_csv_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("band.csv");
    let args = [
        "solve", "--f", "const:1", "--g", "const:-1", "--u0", r#"{"triangular":[-3,-2,-1]}"#, "--steps", "200",
        "--grid-n", "20", "--output", path.to_str().unwrap(),
    ];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let summary = json(&out);
    assert_eq!(summary["stacking_valid"], true);
    let first = std::fs::read(&path).unwrap();
    run(&args);
    assert_eq!(first, std::fs::read(&path).unwrap());

    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,alpha,lower,upper,residual"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 201 * 21);
    assert!(rows.windows(2).all(|w| (w[0][0], w[0][1]) < (w[1][0], w[1][1])));
    let last = rows.last().unwrap();
    assert_eq!((last[0], last[1]), (1.0, 1.0));
    assert!((last[2] + 3.0).abs() < 1e-12 && (last[3] + 3.0).abs() < 1e-12);
}

#[test]
fn solve_domain_violation_exits_2() {
    let (code, out, _) = run(&[
        "solve", "--f", "affine:0,1", "--g", "const:-1", "--u0", r#"{"triangular":[-1,0,1]}"#, "--steps", "20",
        "--grid-n", "4",
    ]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["reason"], "domain_violation");
    assert!(v["alpha"].is_number());
}
