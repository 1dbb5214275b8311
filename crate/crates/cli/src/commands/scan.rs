use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use apery_core::sweep::scan_row;
use apery_core::{AperyPath, ShiftedFamily};

use super::Context;
use crate::args::{Format, ScanArgs, SCHEMA};
use crate::error::{CliError, CliResult};
use crate::render::{self, opt};

const HEADER: [&str; 9] = [
    "n",
    "path",
    "F",
    "g",
    "t",
    "W",
    "symmetric",
    "pseudosymmetric",
    "time_ns",
];

#[derive(Serialize)]
struct Row {
    n: u64,
    path: AperyPath,
    #[serde(rename = "F")]
    frobenius: i64,
    g: u64,
    t: Option<usize>,
    #[serde(rename = "W")]
    wilf: Option<i64>,
    symmetric: Option<bool>,
    pseudosymmetric: Option<bool>,
    time_ns: Option<u64>,
}

impl Row {
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.path.to_string(),
            self.frobenius.to_string(),
            self.g.to_string(),
            opt(self.t),
            opt(self.wilf),
            opt(self.symmetric),
            opt(self.pseudosymmetric),
            opt(self.time_ns),
        ]
    }
}

#[derive(Serialize)]
struct ScanOutput<'a> {
    schema: &'static str,
    base: &'a [u64],
    from: u64,
    to: u64,
    rows: &'a [Row],
}

pub fn run(ctx: &Context, args: &ScanArgs) -> CliResult<String> {
    let family = ShiftedFamily::from_generators(&args.base.0)?;
    if args.from > args.to {
        return Err(CliError::Input(format!(
            "empty range: --from {} exceeds --to {}",
            args.from, args.to
        )));
    }
    let shifts: Vec<u64> = (args.from.max(1)..=args.to)
        .filter(|&n| family.member_coprime(n))
        .collect();
    let Some(&largest) = shifts.last() else {
        return Err(CliError::Input(format!(
            "no shift in [{}, {}] is coprime to d = {}",
            args.from,
            args.to,
            family.d()
        )));
    };
    ctx.check_size(largest)?;

    let rows = ctx.pool(None, || {
        shifts
            .par_iter()
            .map(|&n| {
                let start = Instant::now();
                let row = scan_row(&family, n)?;
                Ok(Row {
                    n,
                    path: row.path,
                    frobenius: row.frobenius,
                    g: row.genus,
                    t: row.type_,
                    wilf: row.wilf,
                    symmetric: row.symmetric,
                    pseudosymmetric: row.pseudosymmetric,
                    time_ns: ctx.time(start.elapsed()),
                })
            })
            .collect::<CliResult<Vec<Row>>>()
    })??;

    let cells = || rows.iter().map(Row::cells).collect::<Vec<_>>();
    match ctx.format_or(Format::Csv) {
        Format::Csv => Ok(render::csv(&HEADER, &cells())),
        Format::Json => render::json(&ScanOutput {
            schema: SCHEMA,
            base: family.base().generators(),
            from: args.from,
            to: args.to,
            rows: &rows,
        }),
        Format::Md => Ok(render::markdown(
            &format!(
                "Shifts of {} for n in [{}, {}]",
                family.base(),
                args.from,
                args.to
            ),
            &HEADER,
            &cells(),
        )),
    }
}
