mod apery;
mod bench;
mod fit;
mod invariants;
mod scan;

use std::time::{Duration, Instant};

use apery_core::{apery_auto_with_deadline, AperyOutcome, NumericalMonoid};

use crate::args::{Cli, Command, Format};
use crate::error::{CliError, CliResult};

/// Settings shared by every command.
pub struct Context {
    pub format: Option<Format>,
    pub no_time: bool,
    pub threads: Option<usize>,
    pub max_apery: u64,
    pub time_limit: Option<Duration>,
}

impl Context {
    fn from_cli(cli: &Cli) -> CliResult<Self> {
        let time_limit = cli.time_limit.map(seconds).transpose()?;
        Ok(Context {
            format: cli.format,
            no_time: cli.no_time,
            threads: cli.threads.map(usize::from),
            max_apery: cli.max_apery,
            time_limit,
        })
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    pub fn time(&self, d: Duration) -> Option<u64> {
        (!self.no_time).then(|| crate::render::nanos(d))
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.time_limit.map(|limit| Instant::now() + limit)
    }

    /// Refuses Apéry sets with more than `--max-apery` elements.
    pub fn check_size(&self, elements: u64) -> CliResult<()> {
        if elements > self.max_apery {
            return Err(CliError::Budget(format!(
                "an Apéry set of {elements} elements exceeds --max-apery {}",
                self.max_apery
            )));
        }
        Ok(())
    }

    /// Runs `job` on a pool of `--threads` workers, or `default` if unset.
    pub fn pool<T: Send>(
        &self,
        default: Option<usize>,
        job: impl FnOnce() -> T + Send,
    ) -> CliResult<T> {
        let threads = self.threads.or(default).unwrap_or(0);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Input(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(job))
    }
}

pub fn seconds(secs: f64) -> CliResult<Duration> {
    Duration::try_from_secs_f64(secs)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| CliError::Input(format!("{secs} is not a positive number of seconds")))
}

/// Builds the monoid once its Apéry set on the multiplicity fits the budget.
pub fn monoid(ctx: &Context, gens: &[u64]) -> CliResult<NumericalMonoid> {
    let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
    if let Some(&smallest) = gens.iter().filter(|&&g| g > 0).min() {
        ctx.check_size(smallest / d)?;
    }
    Ok(NumericalMonoid::new(gens)?)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dispatcher run with the size guard and deadline applied.
pub fn dispatch(ctx: &Context, m: &NumericalMonoid) -> CliResult<(AperyOutcome, Duration)> {
    ctx.check_size(m.multiplicity() / m.gcd())?;
    let start = Instant::now();
    let outcome = apery_auto_with_deadline(m, ctx.deadline())?;
    Ok((outcome, start.elapsed()))
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let ctx = Context::from_cli(cli)?;
    match &cli.command {
        Command::Apery(args) => apery::run(&ctx, args),
        Command::Invariants(args) => invariants::run(&ctx, args),
        Command::Scan(args) => scan::run(&ctx, args),
        Command::Bench(args) => bench::run(&ctx, args),
        Command::Fit(args) => fit::run(&ctx, args),
    }
}
