use std::time::Instant;

use serde::Serialize;

use apery_core::{apery_classic_with_deadline, AperyPath, AperySet, ShiftEligibility};

use super::{dispatch, monoid, Context};
use crate::args::{AperyArgs, Format, SCHEMA};
use crate::error::{CliError, CliResult};
use crate::render;

#[derive(Serialize)]
struct Eligibility {
    #[serde(flatten)]
    checks: ShiftEligibility,
    passes: bool,
}

impl From<ShiftEligibility> for Eligibility {
    fn from(checks: ShiftEligibility) -> Self {
        Eligibility {
            passes: checks.passes(),
            checks,
        }
    }
}

#[derive(Serialize)]
struct AperyOutput<'a> {
    schema: &'static str,
    generators: &'a [u64],
    base: u64,
    path: AperyPath,
    eligibility: Option<Eligibility>,
    size: usize,
    elements: Vec<u64>,
    time_ns: Option<u64>,
}

pub fn run(ctx: &Context, args: &AperyArgs) -> CliResult<String> {
    let m = monoid(ctx, &args.generators.0)?;
    let (ap, path, eligibility, elapsed) = match args.x {
        Some(x) if x != m.multiplicity() => {
            if x == 0 {
                return Err(CliError::Input("--x must be positive".into()));
            }
            ctx.check_size(x / m.gcd())?;
            let start = Instant::now();
            let ap = apery_classic_with_deadline(&m, x, ctx.deadline())?;
            (ap, AperyPath::Classic, None, start.elapsed())
        }
        _ => {
            let (out, elapsed) = dispatch(ctx, &m)?;
            (out.apery, out.path, out.eligibility, elapsed)
        }
    };
    let pairs: Vec<(u64, u64)> = ap.by_residue().collect();
    match ctx.format_or(Format::Json) {
        Format::Json => render::json(&AperyOutput {
            schema: SCHEMA,
            generators: m.generators(),
            base: ap.base(),
            path,
            eligibility: eligibility.map(Eligibility::from),
            size: ap.len(),
            elements: pairs.iter().map(|&(_, a)| a).collect(),
            time_ns: ctx.time(elapsed),
        }),
        Format::Csv => Ok(render::csv(&["residue", "element"], &rows(&pairs))),
        Format::Md => Ok(render::markdown(
            &title(&ap, path),
            &["residue", "element"],
            &rows(&pairs),
        )),
    }
}

fn rows(pairs: &[(u64, u64)]) -> Vec<Vec<String>> {
    pairs
        .iter()
        .map(|(r, a)| vec![r.to_string(), a.to_string()])
        .collect()
}

fn title(ap: &AperySet, path: AperyPath) -> String {
    format!(
        "Ap({}; {}), {} elements, {path} path",
        render::monoid_label(ap.monoid().generators()),
        ap.base(),
        ap.len()
    )
}
