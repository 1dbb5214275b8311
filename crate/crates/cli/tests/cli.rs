use std::process::{Command, Output};

use serde_json::Value;

fn apery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = apery(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn apery_fast_path_example() {
    let v = json(&["apery", "10,12,13", "--no-time"]);
    assert_eq!(v["schema"], "apery-cli/1");
    assert_eq!(v["path"], "fast");
    assert_eq!(v["size"], 10);
    assert_eq!(
        v["elements"],
        serde_json::json!([0, 51, 12, 13, 24, 25, 26, 37, 38, 39])
    );
    assert_eq!(v["eligibility"]["passes"], true);
    assert!(v["time_ns"].is_null());
}

#[test]
fn apery_classic_path_example() {
    let v = json(&["apery", "6,9,20", "--no-time"]);
    assert_eq!(v["path"], "classic");
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    assert_eq!(v["eligibility"]["shift_above_square"], false);
}

#[test]
fn apery_with_explicit_base() {
    let v = json(&["apery", "6,9,20", "--x", "9", "--no-time"]);
    assert_eq!(v["base"], 9);
    assert_eq!(
        v["elements"],
        serde_json::json!([0, 46, 20, 12, 40, 32, 6, 52, 26])
    );
    assert_eq!(
        apery(&["apery", "6,9,20", "--x", "7"]).status.code(),
        Some(2)
    );
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(apery(&["apery", "0,3"]).status.code(), Some(2));
    assert_eq!(apery(&["apery", "3,x"]).status.code(), Some(2));
    assert_eq!(apery(&["invariants", ""]).status.code(), Some(2));
    assert_eq!(
        apery(&["fit", "--base", "3,5", "--invariant", "delta"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn resource_budget_exits_with_four() {
    let out = apery(&["apery", "100001,100002", "--max-apery", "1000"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-apery"));
}

#[test]
fn overflow_exits_with_three() {
    let big = format!("{},{}", u64::MAX / 2, u64::MAX / 2 + 1);
    let out = apery(&["invariants", &big, "--max-apery", "100"]);
    assert_eq!(out.status.code(), Some(4));
    let out = apery(&["invariants", &big, "--max-apery", &u64::MAX.to_string()]);
    assert_eq!(
        out.status.code(),
        Some(4),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = apery(&[
        "fit",
        "--base",
        &format!("{}", u64::MAX / 2),
        "--invariant",
        "genus",
    ]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn invariants_examples() {
    let v = json(&["invariants", "10,12,13", "--no-time"]);
    assert_eq!(
        (&v["frobenius"], &v["genus"], &v["type"], &v["wilf"]),
        (
            &Value::from(41),
            &Value::from(22),
            &Value::from(2),
            &Value::from(15)
        )
    );
    assert_eq!(v["pseudo_frobenius"], serde_json::json!([27, 41]));

    let v = json(&["invariants", "2,3", "--no-time"]);
    assert_eq!(
        (&v["frobenius"], &v["genus"], &v["type"]),
        (&Value::from(1), &Value::from(1), &Value::from(1))
    );
    assert_eq!(v["symmetric"], true);

    let v = json(&["invariants", "1", "--no-time"]);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["frobenius"], -1);
}

#[test]
fn scan_header_and_rows() {
    let out = apery(&[
        "scan",
        "--base",
        "3,5",
        "--from",
        "26",
        "--to",
        "60",
        "--no-time",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,path,F,g,t,W,symmetric,pseudosymmetric,time_ns")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 35);
    assert!(rows.iter().all(|r| r[1] == "fast" && r[8].is_empty()));
    // t is 5-periodic
    for pair in rows.windows(6) {
        assert_eq!(pair[0][4], pair[5][4]);
    }
}

#[test]
fn scan_skips_shifts_sharing_a_factor_with_d() {
    let out = apery(&[
        "scan",
        "--base",
        "4,6",
        "--from",
        "30",
        "--to",
        "40",
        "--no-time",
    ]);
    let text = stdout(&out);
    let ns: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ns, ["31", "33", "35", "37", "39"]);
    assert!(text.contains("33,classic") && text.contains("37,fast"));
}

#[test]
fn scan_single_row_and_errors() {
    let out = apery(&[
        "scan",
        "--base",
        "2,3",
        "--from",
        "10",
        "--to",
        "10",
        "--no-time",
    ]);
    assert_eq!(
        stdout(&out).lines().nth(1),
        Some("10,fast,41,22,2,15,false,false,")
    );
    assert_eq!(stdout(&out).lines().count(), 2);
    assert_eq!(
        apery(&["scan", "--base", "2,3", "--from", "5", "--to", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        apery(&["scan", "--base", "4,6", "--from", "30", "--to", "30"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic_without_timings() {
    for args in [
        &[
            "scan",
            "--base",
            "6,9,20",
            "--from",
            "380",
            "--to",
            "460",
            "--no-time",
            "--threads",
            "4",
        ][..],
        &[
            "scan",
            "--base",
            "6,9,20",
            "--from",
            "380",
            "--to",
            "460",
            "--no-time",
            "--format",
            "json",
        ],
        &["invariants", "10,12,13", "--no-time", "--format", "md"],
        &["fit", "--base", "4,6", "--invariant", "wilf"],
    ] {
        let first = apery(args).stdout;
        assert!(!first.is_empty());
        assert_eq!(first, apery(args).stdout, "{args:?}");
    }
    let serial = apery(&[
        "scan",
        "--base",
        "6,9,20",
        "--from",
        "380",
        "--to",
        "460",
        "--no-time",
        "--threads",
        "1",
    ]);
    let parallel = apery(&[
        "scan",
        "--base",
        "6,9,20",
        "--from",
        "380",
        "--to",
        "460",
        "--no-time",
        "--threads",
        "3",
    ]);
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn bench_default_rows() {
    let out = apery(&["bench", "--no-time"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("| n "))
        .collect();
    let shifts: Vec<&str> = rows
        .iter()
        .map(|r| r.split(" | ").next().unwrap().trim_start_matches("| "))
        .collect();
    assert_eq!(shifts, ["50", "200", "400", "1000", "5000", "10000"]);
    for row in &rows {
        let fast = row.contains("| fast |");
        let n: u64 = row
            .trim_start_matches("| ")
            .split(' ')
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert_eq!(fast, n > 400, "{row}");
        assert_eq!(row.contains("ineligible"), n <= 400, "{row}");
    }
}

#[test]
fn bench_rejects_single_rep_and_marks_skips() {
    assert_eq!(apery(&["bench", "--reps", "1"]).status.code(), Some(2));
    // the deadline is polled every few thousand classes, so use a large shift
    let v = json(&[
        "bench",
        "--shifts",
        "400,300000",
        "--format",
        "json",
        "--cutoff-secs",
        "0.000000001",
        "--no-time",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[1]["classic_status"], "skipped");
    assert_eq!(rows[0]["fast_status"], "ineligible");
    assert_eq!(rows[1]["fast_status"], "ok");
    assert!(rows[1]["fast_ns"].is_null());
}

#[test]
fn fit_examples() {
    let v = json(&["fit", "--base", "3,5", "--invariant", "genus"]);
    for class in v["classes"].as_array().unwrap() {
        assert_eq!(class["coefficients"][0], "1/10");
    }
    assert_eq!(v["verification"]["exact"], true);
    assert!(v["verification"]["checked"].as_u64().unwrap() >= 10);

    let v = json(&[
        "fit",
        "--base",
        "3,5",
        "--invariant",
        "type",
        "--degree",
        "0",
    ]);
    assert!(v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["coefficients"].as_array().unwrap().len() == 1));

    let v = json(&["fit", "--base", "6,9,20", "--invariant", "frobenius"]);
    assert!(v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["coefficients"][0] == "1/20"));
    assert_eq!(v["verification"]["exact"], true);

    let v = json(&["fit", "--base", "4,6", "--invariant", "genus"]);
    assert_eq!(v["absent_classes"], serde_json::json!([0, 2, 4]));
}

#[test]
fn fit_errors_name_the_residue_class() {
    // degree 1 with three periods of samples cannot fit a quasiquadratic
    let out = apery(&[
        "fit",
        "--base",
        "3,5",
        "--invariant",
        "genus",
        "--degree",
        "1",
        "--from",
        "26",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verification"]["exact"], false);
    assert_eq!(v["verification"]["mismatch"]["residue"], 1);

    let out = apery(&[
        "fit",
        "--base",
        "3,5",
        "--invariant",
        "genus",
        "--from",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&[
        "fit",
        "--base",
        "3,5",
        "--invariant",
        "genus",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_documents_fields() {
    let out = apery(&["scan", "--help"]);
    let text = stdout(&out);
    for field in [
        "n ",
        "path",
        "F, g",
        "t, W",
        "symmetric",
        "pseudosymmetric",
        "time_ns",
    ] {
        assert!(text.contains(field), "{field}");
    }
    assert!(stdout(&apery(&["--help"])).contains("apery-cli/1"));
    assert!(stdout(&apery(&["fit", "--help"])).contains("verification"));
}
