//! End-to-end checks of the binary: JSON shape, pinned values, exit codes
//! and rational round-tripping.

use std::process::Command;

use feulerian::exactmath::parse_rational;
use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_feulerian"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let doc: Value = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (doc, code)
}

fn coeffs_of(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|c| c.as_str().expect("string rational").to_string())
        .collect()
}

#[test]
fn hatw_block_route_pinned_values() {
    let (doc, code) = run(&["hatw", "--a", "1", "--blocks", "11/10:1,11/10:1"]);
    assert_eq!(code, 0);
    assert_eq!(
        coeffs_of(&doc["outputs"]["coeffs"]),
        vec!["121/100", "39/50", "1/100"]
    );
    assert_eq!(
        coeffs_of(&doc["outputs"]["normalized_coeffs"]),
        vec!["1", "78/121", "1/121"]
    );
    // every serialized rational parses back to the identical value
    for s in coeffs_of(&doc["outputs"]["coeffs"]) {
        let r = parse_rational(&s).unwrap();
        assert_eq!(feulerian::exactmath::format_rational(&r), s);
    }
}

#[test]
fn hatw_coefficient_route() {
    let (doc, code) = run(&["hatw", "--a", "1", "--coeffs", "1/8,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(
        coeffs_of(&doc["outputs"]["coeffs"]),
        vec!["1/8", "3/4", "9/8"]
    );
}

#[test]
fn narayana_all_routes() {
    let (doc, code) = run(&["narayana", "--d", "3", "--m", "2", "--route", "all"]);
    assert_eq!(code, 0);
    assert_eq!(coeffs_of(&doc["outputs"]["coeffs"]), vec!["1", "3", "1"]);
    assert_eq!(doc["outputs"]["catalan"], "5");
    assert_eq!(doc["outputs"]["palindromic"], true);
    assert_eq!(doc["outputs"]["routes_agree"], true);
    assert_eq!(doc["outputs"]["zeros"]["neg"], 2);
}

#[test]
fn quad_region_shape() {
    let (doc, code) = run(&["quad-region", "--a", "1", "--grid", "5"]);
    assert_eq!(code, 0);
    let rows = doc["outputs"].as_array().unwrap();
    assert_eq!(rows.len(), 25);
    for row in rows {
        assert!(row["inside"].is_boolean());
        parse_rational(row["b"].as_str().unwrap()).unwrap();
        parse_rational(row["c"].as_str().unwrap()).unwrap();
    }
}

#[test]
fn tp_check_fails_with_witness() {
    let (doc, code) = run(&[
        "tp-check",
        "--blocks",
        "11/10:1",
        "--max-order",
        "3",
        "--window",
        "12",
    ]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "FAIL");
    assert_eq!(doc["witness"]["value"], "-1/10");
    assert_eq!(doc["witness"]["rows"], serde_json::json!([0, 1, 2]));
    assert_eq!(doc["witness"]["cols"], serde_json::json!([1, 2, 3]));
}

#[test]
fn jp_reports_verdict() {
    let (doc, code) = run(&["jp", "--alpha", "0,1/2", "--beta", "0", "--n", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["outputs"]["zones"]["in_01"], 2);
    assert_eq!(doc["outputs"]["verdict"], "Confined(true)");
}

#[test]
fn jp_narayana_connection() {
    let (doc, code) = run(&[
        "jp-narayana",
        "--d",
        "3",
        "--m",
        "2",
        "--variant",
        "beta-d-minus-1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["outputs"]["identity_holds"], true);
    assert_eq!(doc["outputs"]["beta"], "2");
}

#[test]
fn mp_verify_first_and_second() {
    for which in ["first", "second"] {
        let (doc, code) = run(&[
            "mp-verify",
            "--which",
            which,
            "--delta",
            "1/2",
            "--epsilon",
            "1/3",
            "--rho",
            "5/2",
            "--nu",
            "3/2",
            "--omega",
            "1",
        ]);
        assert_eq!(code, 0, "{which}");
        assert_eq!(doc["status"], "PASS");
    }
}

#[test]
fn malformed_rational_is_an_error() {
    let (doc, code) = run(&["hatw", "--a", "1.5", "--blocks", "2:1"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "ERROR");
}

#[test]
fn m_eulerian_zone_report() {
    let (doc, code) = run(&["m-eulerian", "--m", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(coeffs_of(&doc["outputs"]["coeffs"]), vec!["1", "8", "6"]);
    assert_eq!(doc["outputs"]["all_negative"], true);
}
