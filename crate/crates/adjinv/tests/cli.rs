//! End-to-end tests of the installed binary: JSON envelope shape, text
//! output, exit codes, and the big-integer encoding rule.

use num_bigint::BigInt;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_adjinv"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let mut full: Vec<&str> = args.to_vec();
    full.push("--json");
    let (code, stdout, stderr) = run(&full);
    assert_eq!(code, 0, "args {args:?}, stderr: {stderr}");
    serde_json::from_str(&stdout).expect("valid JSON on stdout")
}

fn all_checks_pass(report: &serde_json::Value) {
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["passed"], true, "{}", c["name"]);
    }
}

#[test]
fn info_reports_product_structure() {
    let v = run_json(&["info", "--algebra", "B3xG2"]);
    assert_eq!(v["command"], "info");
    assert_eq!(v["algebra"], "B3xG2");
    assert_eq!(v["result"]["rank"], 5);
    assert_eq!(v["result"]["dimension"], 35);
    assert_eq!(v["result"]["positive_roots"], 15);
    let factors = v["result"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    assert_eq!(factors[0]["type"], "B3");
    assert_eq!(factors[1]["type"], "G2");
    all_checks_pass(&v);
}

#[test]
fn invariants_envelope_has_the_documented_shape() {
    let v = run_json(&["invariants", "--algebra", "G2", "--mu", "1,0", "--nu", "1,1"]);
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["algebra", "checks", "command", "inputs", "result"]);
    assert_eq!(v["inputs"]["mu"], serde_json::json!([1, 0]));
    assert_eq!(v["inputs"]["nu"], serde_json::json!([1, 1]));
    assert_eq!(v["result"]["dim"], 1);
    assert_eq!(v["result"]["class"]["kind"], "root-shift");
    assert_eq!(v["result"]["class"]["exception"], serde_json::Value::Null);
    assert_eq!(v["result"]["dim_v_nu"], 64);
    all_checks_pass(&v);

    // the exceptional cancellation shows up in the class report
    let v = run_json(&["invariants", "--algebra", "G2", "--mu", "1,0", "--nu", "0,1"]);
    assert_eq!(v["result"]["dim"], 0);
    assert_eq!(v["result"]["class"]["exception"]["kind"], "g2-at-one");
    all_checks_pass(&v);
}

#[test]
fn table1_lists_c3_pairs_in_epsilon_form() {
    let (code, stdout, _) = run(&["table1", "--algebra", "C3"]);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = stdout.lines().filter(|l| l.starts_with("node")).collect();
    lines.sort();
    let mut expected = vec![
        "node 1: β = e1 + e2",
        "node 1: β = -e1 - e2",
        "node 2: β = e2 + e3",
        "node 2: β = -e2 - e3",
    ];
    expected.sort();
    assert_eq!(lines, expected);
    assert!(stdout.contains("[ok]"));
}

#[test]
fn decompose_handles_a_general_tensor_square() {
    // 7 ⊗ 7 = 1 + 7 + 14 + 27 for G2
    let v = run_json(&["decompose", "--algebra", "G2", "--mu", "1,0", "--nu", "1,0"]);
    assert_eq!(v["result"]["distinct"], 4);
    assert_eq!(v["result"]["total_dimension"], 49);
    let terms = v["result"]["terms"].as_array().unwrap();
    let labels: Vec<Vec<i64>> = terms
        .iter()
        .map(|t| {
            t["labels"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(labels, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0]]);
    for t in terms {
        assert_eq!(t["multiplicity"], 1);
    }
    all_checks_pass(&v);
}

#[test]
fn verify_sweep_exits_clean_on_a_small_grid() {
    let v = run_json(&["verify", "--algebra", "B2", "--max-label", "1", "--sum", "2"]);
    assert_eq!(v["result"]["failures"], serde_json::json!([]));
    assert_eq!(v["result"]["weights"], 4);
    assert_eq!(v["result"]["pairs"], 16);
    all_checks_pass(&v);
}

#[test]
fn domain_errors_exit_with_code_two() {
    let (code, _, stderr) = run(&["info", "--algebra", "Q5"]);
    assert_eq!(code, 2, "{stderr}");

    let (code, _, stderr) = run(&["invariants", "--algebra", "G2", "--mu", "1,2,3", "--nu", "1,0"]);
    assert_eq!(code, 2, "{stderr}");

    // ϖ1 of A2 is not self-dual, so it has no symmetric/alternating split
    let (code, _, stderr) = run(&["split", "--algebra", "A2", "--mu", "1,0"]);
    assert_eq!(code, 2, "{stderr}");

    let (code, _, _) = run(&["frobnicate", "A2"]);
    assert_eq!(code, 2);
}

#[test]
fn size_cap_exits_with_code_three() {
    let (code, _, stderr) = run(&[
        "decompose", "--algebra", "B3", "--mu", "1,1,1", "--nu", "1,1,1", "--char-cap", "10",
    ]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn big_dimensions_encode_as_decimal_strings() {
    let v = run_json(&["decompose", "--algebra", "E8", "--mu", "1,1,1,1,1,1,1,1"]);
    let total = v["result"]["total_dimension"]
        .as_str()
        .expect("value beyond 2^53 must be a JSON string");

    // g ⊗ V_ρ has total dimension 248 · dim V_ρ, and for ρ the Weyl
    // dimension formula telescopes to 2^N with N the number of
    // positive roots, here 2^120
    let expected = BigInt::from(248u32) << 120u32;
    assert_eq!(total, expected.to_string());
    all_checks_pass(&v);
}
