use apery_wasm::{apery_report, fit_report, scan_report};
use serde_json::Value;

fn parse(text: String) -> Value {
    serde_json::from_str(&text).unwrap()
}

#[test]
fn apery_report_for_10_12_13() {
    let v = parse(apery_report("10, 12, 13").unwrap());
    assert_eq!(v["path"], "fast");
    assert_eq!(
        v["elements"],
        serde_json::json!([0, 51, 12, 13, 24, 25, 26, 37, 38, 39])
    );
    assert_eq!(v["report"]["frobenius"], 41);
    assert_eq!(v["report"]["wilf"], 15);
}

#[test]
fn scan_report_rows() {
    let v = parse(scan_report("3,5", 24, 30).unwrap());
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0]["path"], "classic");
    assert_eq!(rows[2]["path"], "fast");
    assert!(scan_report("3,5", 5, 4).is_err());
    assert!(scan_report("3,5", 1, 100_000).is_err());
}

#[test]
fn fit_report_leading_coefficients() {
    let v = parse(fit_report("3,5", "genus").unwrap());
    assert_eq!(v["exact"], true);
    for class in v["classes"].as_array().unwrap() {
        assert_eq!(class["coefficients"][0], "1/10");
    }
    assert!(fit_report("3,5", "delta").is_err());
}

#[test]
fn rejects_bad_input() {
    assert!(apery_report("").is_err());
    assert!(apery_report("0,3").is_err());
    assert!(apery_report("a,b").is_err());
    assert!(apery_report("5000000,5000001").is_err());
}
