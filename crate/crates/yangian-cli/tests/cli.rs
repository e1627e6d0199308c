//! End-to-end checks of the command-line interface via the built binary.

use std::process::{Command, Output};

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn roots_json_contains_delta_with_multiplicity_two() {
    let out = yangian(&["roots", "--algebra", "A2affine", "--height", "3", "--json"]);
    assert!(out.status.success());
    let arr: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let delta = arr
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["kind"] == "imaginary")
        .expect("delta entry");
    assert_eq!(delta["coords"], serde_json::json!([1, 1, 1]));
    assert_eq!(delta["multiplicity"], 2);
}

#[test]
fn unknown_algebra_exits_with_usage_error() {
    let out = yangian(&["roots", "--algebra", "E8", "--height", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("supported names"), "stderr: {err}");
}

#[test]
fn verma_dims_match_the_depth_grading() {
    let out = yangian(&[
        "verma",
        "--algebra",
        "A2affine",
        "--hw",
        r#"["1","1/2","2","0"]"#,
        "--depth",
        "3",
        "--dims",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 3, 9, 21]));
}

#[test]
fn eval_module_checks_defining_relations() {
    let out = yangian(&[
        "eval-module",
        "--n",
        "3",
        "--a",
        "1/2",
        "--rmax",
        "2",
        "--check-defining",
        "--json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["defining"]["fail"], 0);
    assert!(v["defining"]["pass"].as_u64().unwrap() > 0);
}

#[test]
fn verify_writes_deterministic_reports_and_exits_zero() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("yangian_report_1.json");
    let p2 = dir.join("yangian_report_2.json");
    for p in [&p1, &p2] {
        let out = yangian(&[
            "verify",
            "--algebra",
            "A2",
            "--suite",
            "minimal",
            "--rmax",
            "1",
            "--seed",
            "3",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    }
    let r1 = std::fs::read(&p1).unwrap();
    let r2 = std::fs::read(&p2).unwrap();
    assert_eq!(r1, r2, "identical config + seed must give byte-identical reports");
    let report: serde_json::Value = serde_json::from_slice(&r1).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["config"]["seed"], 3);
}

#[test]
fn verify_affine_lie_suite_small_depth() {
    let out = yangian(&[
        "verify",
        "--algebra",
        "A2affine",
        "--suite",
        "lie",
        "--depth",
        "2",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("0 fail"), "stdout: {text}");
}
