//! Small writers for the CSV and Markdown outputs.

use std::fmt::Write;
use std::time::Duration;

use serde::Serialize;

use crate::args::SCHEMA;
use crate::error::CliResult;

pub fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut out = serde_json::to_string_pretty(value).expect("output types serialize");
    out.push('\n');
    Ok(out)
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn markdown(title: &str, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("<!-- schema: {SCHEMA} -->\n{title}\n\n");
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

pub fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

pub fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

pub fn human(d: Duration) -> String {
    let ns = d.as_nanos() as f64;
    if ns < 1e3 {
        format!("{ns:.0} ns")
    } else if ns < 1e6 {
        format!("{:.1} µs", ns / 1e3)
    } else if ns < 1e9 {
        format!("{:.1} ms", ns / 1e6)
    } else {
        format!("{:.2} s", ns / 1e9)
    }
}

pub fn monoid_label(gens: &[u64]) -> String {
    let parts: Vec<String> = gens.iter().map(u64::to_string).collect();
    format!("<{}>", parts.join(","))
}
