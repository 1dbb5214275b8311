use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use apery_core::{apery_auto, apery_classic_with_deadline, AperyPath, Error, ShiftedFamily};

use super::{seconds, Context};
use crate::args::{BenchArgs, Format, SCHEMA};
use crate::error::{CliError, CliResult};
use crate::render;

const MIN_REPS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    Skipped,
    Ineligible,
}

#[derive(Serialize)]
struct BenchRow {
    n: u64,
    generators: Vec<u64>,
    path: AperyPath,
    classic_status: Status,
    classic_ns: Option<u64>,
    fast_status: Status,
    fast_ns: Option<u64>,
    #[serde(skip)]
    classic: Option<Duration>,
    #[serde(skip)]
    fast: Option<Duration>,
}

#[derive(Serialize)]
struct BenchOutput<'a> {
    schema: &'static str,
    base: &'a [u64],
    reps: usize,
    cutoff_secs: f64,
    rows: &'a [BenchRow],
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn measure(
    ctx: &Context,
    family: &ShiftedFamily,
    n: u64,
    reps: usize,
    cutoff: Duration,
) -> CliResult<BenchRow> {
    let member = family.member(n)?.monoid;
    let mut classic = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        match apery_classic_with_deadline(&member, n, Some(start + cutoff)) {
            Ok(ap) => {
                classic.push(start.elapsed());
                drop(ap);
            }
            Err(Error::DeadlineExceeded) => {
                classic.clear();
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let classic = (!classic.is_empty()).then(|| median(classic));

    let path = apery_auto(&member)?.path;
    let fast = if path == AperyPath::Fast {
        let samples = (0..reps)
            .map(|_| {
                let start = Instant::now();
                let out = apery_auto(&member)?;
                let elapsed = start.elapsed();
                drop(out);
                Ok(elapsed)
            })
            .collect::<CliResult<Vec<_>>>()?;
        Some(median(samples))
    } else {
        None
    };

    Ok(BenchRow {
        n,
        generators: member.generators().to_vec(),
        path,
        classic_status: if classic.is_some() {
            Status::Ok
        } else {
            Status::Skipped
        },
        classic_ns: classic.and_then(|d| ctx.time(d)),
        fast_status: if fast.is_some() {
            Status::Ok
        } else {
            Status::Ineligible
        },
        fast_ns: fast.and_then(|d| ctx.time(d)),
        classic,
        fast,
    })
}

pub fn run(ctx: &Context, args: &BenchArgs) -> CliResult<String> {
    if args.reps < MIN_REPS {
        return Err(CliError::Input(format!(
            "--reps must be at least {MIN_REPS}, got {}",
            args.reps
        )));
    }
    let cutoff = seconds(args.cutoff_secs)?;
    let family = ShiftedFamily::from_generators(&args.base.0)?;
    let shifts = &args.shifts.0;
    if let Some(&zero) = shifts.iter().find(|&&n| n == 0) {
        return Err(CliError::Input(format!("shift {zero} must be positive")));
    }
    ctx.check_size(shifts.iter().copied().max().unwrap_or(0))?;

    // concurrent runs disturb each other's timings, so one worker by default
    let rows = ctx.pool(Some(1), || {
        shifts
            .par_iter()
            .map(|&n| measure(ctx, &family, n, args.reps, cutoff))
            .collect::<CliResult<Vec<_>>>()
    })??;

    let show = |status: Status, time: Option<Duration>, csv: bool| match (status, time) {
        (Status::Ok, Some(_)) if ctx.no_time => "-".to_string(),
        (Status::Ok, Some(d)) if csv => render::nanos(d).to_string(),
        (Status::Ok, Some(d)) => render::human(d),
        (Status::Skipped, _) => format!("skipped (> {})", render::human(cutoff)),
        (Status::Ineligible, _) => "ineligible".to_string(),
        (Status::Ok, None) => unreachable!("timed rows carry a duration"),
    };
    let table = |csv: bool| -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| {
                let label = render::monoid_label(&r.generators);
                vec![
                    r.n.to_string(),
                    label,
                    show(r.classic_status, r.classic, csv),
                    show(r.fast_status, r.fast, csv),
                    r.path.to_string(),
                ]
            })
            .collect()
    };
    match ctx.format_or(Format::Md) {
        Format::Md => Ok(render::markdown(
            &format!(
                "Apéry set runtimes for shifts of {}, median of {} runs",
                family.base(),
                args.reps
            ),
            &["n", "M_n", "classic", "fast", "path"],
            &table(false),
        )),
        Format::Csv => Ok(render::csv(
            &["n", "generators", "classic_ns", "fast_ns", "path"],
            &table(true),
        )),
        Format::Json => render::json(&BenchOutput {
            schema: SCHEMA,
            base: family.base().generators(),
            reps: args.reps,
            cutoff_secs: args.cutoff_secs,
            rows: &rows,
        }),
    }
}
