//! Exit codes and output shapes of the binary.

use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_rt-lens");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

#[test]
fn invariant_json_is_exact_and_stable() {
    let out = run(&["invariant", "--algebra", "g2", "--order", "11", "--lens", "5", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "rt-lens/1");
    assert_eq!(doc["hj_terms"], serde_json::json!([3, 2]));
    assert!(doc.get("timings_ms").is_none());
    let re = doc["f"]["numeric"]["re"].as_f64().unwrap();
    assert!((re - 1.91898594722897).abs() < 1e-12);
    assert_eq!(doc["f"]["numeric"]["im"].as_f64().unwrap(), 0.0);
    let again = run(&["invariant", "--algebra", "g2", "--order", "11", "--lens", "5", "2", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        &["invariant", "--algebra", "g2", "--order", "9", "--lens", "3", "1"][..],
        &["invariant", "--algebra", "g2", "--order", "7", "--lens", "4", "2"],
        &["invariant", "--algebra", "g2", "--order", "5", "--lens", "3", "1"],
        &["gauss", "--algebra", "f4", "--order", "8"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
    }
    let out = run(&["invariant", "--algebra", "g2", "--order", "9", "--lens", "3", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("order divisible by 3 forbidden for G2"));
}

#[test]
fn capacity_exits_three() {
    let out = run(&["verify", "--algebra", "e8", "--order", "31", "--suite", "weyl"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["gauss", "--algebra", "e8", "--order", "31", "--brute"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--algebra", "g2", "--order", "11", "--suite", "kirby", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    let bad = run(&["verify", "--algebra", "g2", "--order", "5", "--suite", "kirby"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn degenerate_table_reports_h0() {
    let out = run(&["table", "--algebra", "g2", "--order", "5", "--m-max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["degenerate"].as_str().unwrap().contains("Q(0) = 0"));
    for row in doc["rows"].as_array().unwrap() {
        assert!(row["f"].is_null());
        assert_eq!(row["h0"]["numeric"]["re"], 0.0);
    }
}

#[test]
fn gauss_brute_agrees() {
    let out = run(&["gauss", "--algebra", "g2", "--order", "13", "--k", "-2", "--brute", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["agree"], true);
}
