use serde::Serialize;

use apery_core::sweep::{fit_family_from, Invariant};
use apery_core::ShiftedFamily;

use super::Context;
use crate::args::{FitArgs, Format, SCHEMA};
use crate::error::{CliError, CliResult};
use crate::render;

#[derive(Serialize)]
struct Point {
    n: u64,
    value: i64,
}

#[derive(Serialize)]
struct Window {
    from: u64,
    to: u64,
    samples: Vec<Point>,
}

#[derive(Serialize)]
struct Class {
    residue: u64,
    /// Highest power of `n` first.
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct Mismatch {
    n: u64,
    residue: u64,
    expected: i64,
    predicted: Option<String>,
}

#[derive(Serialize)]
struct Verification {
    points: Vec<Point>,
    checked: usize,
    exact: bool,
    mismatch: Option<Mismatch>,
}

#[derive(Serialize)]
struct FitOutput<'a> {
    schema: &'static str,
    base: &'a [u64],
    invariant: Invariant,
    period: u64,
    degree: usize,
    valid_from: u64,
    window: Window,
    classes: Vec<Class>,
    absent_classes: Vec<u64>,
    verification: Verification,
}

fn points<'a>(samples: impl IntoIterator<Item = (&'a u64, &'a i64)>) -> Vec<Point> {
    samples
        .into_iter()
        .map(|(&n, &value)| Point { n, value })
        .collect()
}

pub fn run(ctx: &Context, args: &FitArgs) -> CliResult<String> {
    if ctx.format_or(Format::Json) != Format::Json {
        return Err(CliError::Input("fit only writes JSON".into()));
    }
    let family = ShiftedFamily::from_generators(&args.base.0)?;
    let r_k = family.r_k();
    let threshold = r_k
        .checked_mul(r_k)
        .ok_or(apery_core::Error::Overflow("r_k^2"))?;
    let from = args.from.unwrap_or(threshold + 1);
    if from <= threshold {
        return Err(CliError::Input(format!(
            "the fit window must start above r_k^2 = {threshold}, got --from {from}"
        )));
    }
    if args.holdout == 0 {
        return Err(CliError::Input("--holdout must be positive".into()));
    }
    let degree = args.degree.unwrap_or(args.invariant.natural_degree());
    let top = from.saturating_add((degree as u64 + 1) * r_k + args.holdout as u64 * family.d());
    ctx.check_size(top)?;

    let fitted = fit_family_from(&family, args.invariant, degree, from, args.holdout)?;
    let quasi = &fitted.quasi;
    let classes = quasi
        .present_classes()
        .map(|residue| Class {
            residue,
            coefficients: quasi
                .coefficients(residue)
                .unwrap_or_default()
                .iter()
                .map(ToString::to_string)
                .collect(),
        })
        .collect();
    let present: Vec<u64> = quasi.present_classes().collect();
    let report = &fitted.verification;
    render::json(&FitOutput {
        schema: SCHEMA,
        base: family.base().generators(),
        invariant: args.invariant,
        period: quasi.period(),
        degree: quasi.degree(),
        valid_from: quasi.valid_from(),
        window: Window {
            from,
            to: from + (degree as u64 + 1) * r_k,
            samples: points(&fitted.fit_samples),
        },
        classes,
        absent_classes: (0..r_k).filter(|c| !present.contains(c)).collect(),
        verification: Verification {
            points: points(&fitted.holdout),
            checked: report.checked,
            exact: report.is_exact(),
            mismatch: report.mismatch.as_ref().map(|m| Mismatch {
                n: m.n,
                residue: m.n % r_k,
                expected: m.expected,
                predicted: m.predicted.as_ref().map(ToString::to_string),
            }),
        },
    })
}
