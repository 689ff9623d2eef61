use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ultralie"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn passing_suite_exits_zero_with_json_report() {
    let out = run(&["verify", "quaternion", "--seed", "3", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "quaternion");
    assert_eq!(v["pass"], true);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["params"]["seed"], 3);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["cases"].as_u64().unwrap() > 0));
}

#[test]
fn failing_suite_exits_one_with_witness() {
    let out = run(&["verify", "lie-axioms", "--algebra", "broken"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    assert_eq!(v["witness"][0]["triple"], serde_json::json!([1, 2, 3]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "quaternion"],
        vec!["verify", "no-such-suite", "--seed", "1"],
        vec!["verify", "quaternion", "--seed", "1", "--prime", "3"],
        vec!["verify", "ultrametric-norms", "--seed", "1", "--prime", "4"],
        vec!["compute", "1/0"],
        vec!["info", "no-such-algebra"],
        vec!["library", "no-such-algebra"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
}

#[test]
fn different_seeds_run_the_same_checks() {
    let a = json(&run(&["verify", "padic-exp", "--seed", "1", "--trials", "20"]));
    let b = json(&run(&["verify", "padic-exp", "--seed", "2", "--trials", "20"]));
    assert_eq!(a["checks"], b["checks"]);
    assert_ne!(a["params"]["seed"], b["params"]["seed"]);
}

#[test]
fn compute_reports_derived_quantities() {
    let v = json(&run(&["compute", "padic(10; 5, 4)", "--format", "json"]));
    assert_eq!(v["kind"], "padic");
    assert_eq!(v["valuation"], 1);
    let v = json(&run(&["compute", "1+2i+3j+4k", "--format", "json"]));
    assert_eq!(v["kind"], "quaternion");
    assert_eq!(v["norm_sq"], "30");
    let v = json(&run(&["compute", "[[1,2],[3,4]]", "--format", "json"]));
    assert_eq!(v["det"], "-2");
    assert_eq!(v["trace"], "5");
}

#[test]
fn info_describes_bundled_and_reduced_algebras() {
    let v = json(&run(&["info", "sl2", "--format", "json"]));
    assert_eq!(
        (v["dim"].as_u64(), v["lie"].as_bool(), v["center_dim"].as_u64()),
        (Some(3), Some(true), Some(0))
    );
    let v = json(&run(&["info", "sl2", "--prime", "2", "--format", "json"]));
    assert_eq!(v["center_dim"], 1);
    let table = run(&["library", "heisenberg"]);
    assert_eq!(table.status.code(), Some(0));
    assert_eq!(json(&table)["dim"], 3);
}
