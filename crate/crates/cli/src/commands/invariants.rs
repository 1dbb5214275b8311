use serde::Serialize;

use apery_core::{AperyPath, InvariantReport};

use super::{dispatch, monoid, Context};
use crate::args::{Format, InvariantsArgs, SCHEMA};
use crate::error::CliResult;
use crate::render::{self, opt};

#[derive(Serialize)]
struct InvariantsOutput {
    schema: &'static str,
    path: AperyPath,
    #[serde(flatten)]
    report: InvariantReport,
    time_ns: Option<u64>,
}

pub fn run(ctx: &Context, args: &InvariantsArgs) -> CliResult<String> {
    let m = monoid(ctx, &args.generators.0)?;
    let (out, elapsed) = dispatch(ctx, &m)?;
    let report = InvariantReport::from_apery(&out.apery)?;
    let time_ns = ctx.time(elapsed);
    match ctx.format_or(Format::Json) {
        Format::Json => render::json(&InvariantsOutput {
            schema: SCHEMA,
            path: out.path,
            report,
            time_ns,
        }),
        Format::Csv => Ok(render::csv(
            &["field", "value"],
            &fields(&report, out.path, time_ns),
        )),
        Format::Md => Ok(render::markdown(
            &format!("Invariants of {}", render::monoid_label(&report.generators)),
            &["field", "value"],
            &fields(&report, out.path, time_ns),
        )),
    }
}

fn list(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn fields(r: &InvariantReport, path: AperyPath, time_ns: Option<u64>) -> Vec<Vec<String>> {
    [
        ("generators", list(&r.generators)),
        ("gcd", r.gcd.to_string()),
        ("primitive", r.primitive.to_string()),
        ("trivial", r.trivial.to_string()),
        ("embedding_dimension", r.embedding_dimension.to_string()),
        ("frobenius", r.frobenius.to_string()),
        ("genus", r.genus.to_string()),
        (
            "pseudo_frobenius",
            opt(r.pseudo_frobenius.as_deref().map(list)),
        ),
        ("type", opt(r.type_)),
        ("wilf", opt(r.wilf)),
        ("symmetric", opt(r.symmetric)),
        ("pseudosymmetric", opt(r.pseudosymmetric)),
        ("path", path.to_string()),
        ("time_ns", opt(time_ns)),
    ]
    .into_iter()
    .map(|(k, v)| vec![k.to_string(), v])
    .collect()
}
