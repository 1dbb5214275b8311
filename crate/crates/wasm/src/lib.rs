//! Bindings behind the static demo page in `www/`.
//!
//! Each export takes the raw text of the page's inputs and returns a JSON
//! document; failures come back as a thrown error with a readable message.
//! The plain `*_report` functions hold the logic so it can be tested off
//! the browser.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use apery_core::sweep::{fit_family, scan_row, Invariant};
use apery_core::{
    apery_auto, parse_generators, AperyPath, InvariantReport, NumericalMonoid, ShiftedFamily,
};

/// Keeps a page from freezing the tab.
pub const MAX_APERY: u64 = 2_000_000;
pub const MAX_SCAN_ROWS: u64 = 2_000;

fn generators(text: &str) -> Result<Vec<u64>, String> {
    let gens = parse_generators(text).map_err(|e| format!("cannot read {text:?}: {e}"))?;
    if gens.is_empty() {
        return Err("enter at least one generator".into());
    }
    Ok(gens)
}

fn monoid(text: &str) -> Result<NumericalMonoid, String> {
    let gens = generators(text)?;
    let smallest = *gens.iter().min().unwrap();
    if smallest > MAX_APERY {
        return Err(format!(
            "multiplicity above {MAX_APERY} is too large for the page"
        ));
    }
    NumericalMonoid::new(&gens).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo types serialize")
}

#[derive(Serialize)]
struct AperyView {
    generators: Vec<u64>,
    base: u64,
    path: AperyPath,
    eligible: Option<bool>,
    elements: Vec<u64>,
    report: InvariantReport,
}

/// Apéry set on the multiplicity plus the derived invariants.
pub fn apery_report(gens: &str) -> Result<String, String> {
    let m = monoid(gens)?;
    let out = apery_auto(&m).map_err(|e| e.to_string())?;
    let report = InvariantReport::from_apery(&out.apery).map_err(|e| e.to_string())?;
    Ok(to_json(&AperyView {
        generators: m.generators().to_vec(),
        base: out.apery.base(),
        path: out.path,
        eligible: out.eligibility.map(|e| e.passes()),
        elements: out.apery.by_residue().map(|(_, a)| a).collect(),
        report,
    }))
}

#[derive(Serialize)]
struct ScanView {
    n: u64,
    path: AperyPath,
    frobenius: i64,
    genus: u64,
    #[serde(rename = "type")]
    type_: Option<usize>,
    wilf: Option<i64>,
}

/// One row per shift `n` in `[from, to]` coprime to the gcd of the base.
pub fn scan_report(base: &str, from: u64, to: u64) -> Result<String, String> {
    let family = ShiftedFamily::from_generators(&generators(base)?).map_err(|e| e.to_string())?;
    if from > to {
        return Err("the range is empty".into());
    }
    if to - from >= MAX_SCAN_ROWS || to > MAX_APERY {
        return Err(format!(
            "keep ranges under {MAX_SCAN_ROWS} shifts and below {MAX_APERY}"
        ));
    }
    let rows = (from.max(1)..=to)
        .filter(|&n| family.member_coprime(n))
        .map(|n| {
            scan_row(&family, n).map(|r| ScanView {
                n,
                path: r.path,
                frobenius: r.frobenius,
                genus: r.genus,
                type_: r.type_,
                wilf: r.wilf,
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(to_json(&rows))
}

#[derive(Serialize)]
struct FitClass {
    residue: u64,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct FitView {
    period: u64,
    degree: usize,
    valid_from: u64,
    classes: Vec<FitClass>,
    checked: usize,
    exact: bool,
}

/// Exact quasipolynomial in `n` for one invariant of the family.
pub fn fit_report(base: &str, invariant: &str) -> Result<String, String> {
    let gens = generators(base)?;
    if gens.iter().any(|&g| g > 1000) {
        return Err("keep base generators at most 1000".into());
    }
    let family = ShiftedFamily::from_generators(&gens).map_err(|e| e.to_string())?;
    let invariant: Invariant = invariant.parse()?;
    let fitted = fit_family(&family, invariant, invariant.natural_degree(), 12)
        .map_err(|e| e.to_string())?;
    let quasi = &fitted.quasi;
    Ok(to_json(&FitView {
        period: quasi.period(),
        degree: quasi.degree(),
        valid_from: quasi.valid_from(),
        classes: quasi
            .present_classes()
            .map(|residue| FitClass {
                residue,
                coefficients: quasi
                    .coefficients(residue)
                    .unwrap_or_default()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            })
            .collect(),
        checked: fitted.verification.checked,
        exact: fitted.verification.is_exact(),
    }))
}

#[wasm_bindgen]
pub fn apery(gens: &str) -> Result<String, JsError> {
    apery_report(gens).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn scan(base: &str, from: u64, to: u64) -> Result<String, JsError> {
    scan_report(base, from, to).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fit(base: &str, invariant: &str) -> Result<String, JsError> {
    fit_report(base, invariant).map_err(|e| JsError::new(&e))
}
