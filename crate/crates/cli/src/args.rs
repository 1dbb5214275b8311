use clap::{Args, Parser, Subcommand, ValueEnum};

use apery_core::sweep::Invariant;

/// Tag carried by every JSON and Markdown document.
pub const SCHEMA: &str = "apery-cli/1";

const TOP_HELP: &str = "\
Output schema: apery-cli/1 (the \"schema\" key in JSON, a comment line in Markdown).

Exit codes:
  0  success
  2  input error (bad generators, empty range, inconsistent fit, ...)
  3  integer overflow
  4  resource budget exceeded (--max-apery, --time-limit)

Timings are wall-clock nanoseconds from a monotonic clock. With --no-time
they are left empty (CSV), null (JSON) or '-' (Markdown), so output is
byte-for-byte reproducible.";

const APERY_HELP: &str = "\
Fields (JSON):
  schema       output schema tag
  generators   minimal generating set, ascending
  base         the element x the set is taken with respect to
  path         \"fast\" (shifted-family formula) or \"classic\" (shortest paths)
  eligibility  fast-path checks for the decomposition <n, n+r_1, ..., n+r_k>,
               null for one-generator monoids or an explicit non-default --x:
                 n, r_k, d = gcd(r_1..r_k), shift_above_square (n > r_k^2),
                 coprime (gcd(n, d) = 1), multiple_in_base (dn in S), passes
  size         number of elements (x / gcd of the generators)
  elements     least element of each residue class mod x, by residue
  time_ns      time spent computing the set

CSV columns: residue,element";

const INVARIANTS_HELP: &str = "\
Fields (JSON):
  schema, path, time_ns   as for `apery`
  generators              minimal generating set
  gcd, primitive          gcd of the generators; primitive when it is 1
  trivial                 the monoid is all non-negative integers
  embedding_dimension     number of minimal generators (k)
  frobenius               largest gap (F); -1 when there are none
  genus                   number of gaps (g)
  pseudo_frobenius        gaps h with h + s in M for all s > 0 (null unless primitive)
  type                    number of pseudo-Frobenius numbers (null if trivial or not primitive)
  wilf                    k(F - g) - (F + 1) (null unless primitive)
  symmetric               PF = {F}
  pseudosymmetric         PF = {F/2, F}

Non-primitive monoids report F and g scaled by the gcd.
CSV columns: field,value";

const SCAN_HELP: &str = "\
Computes every member M_n = <n, n+r_1, ..., n+r_k> for admissible n in
[--from, --to] (gcd(n, d) = 1). Rows are in increasing n.

CSV columns:
  n                shift
  path             fast or classic
  F, g             Frobenius number and genus of M_n
  t, W             type and Wilf number (empty when undefined)
  symmetric        true/false (empty when undefined)
  pseudosymmetric  true/false (empty when undefined)
  time_ns          time for this row (empty with --no-time)";

const BENCH_HELP: &str = "\
For each shift n, times the classic algorithm and the dispatcher's fast
path on M_n, reporting the median over --reps runs.

Columns:
  n        shift
  M_n      generators of the member
  classic  median classic time, or `skipped` when a run passed --cutoff-secs
  fast     median fast time, or `ineligible` when the fast path does not apply
  path     path the dispatcher picks

CSV/JSON carry the same data with times in nanoseconds (classic_ns,
fast_ns) and the markers in classic_status / fast_status.";

const FIT_HELP: &str = "\
Fits n -> invariant(M_n) by a quasipolynomial of period r_k, sampling the
admissible shifts in [from, from + (degree + 1) r_k), then checks the
next --holdout admissible shifts exactly.

Fields (JSON):
  schema, base, invariant, period, degree
  valid_from        first shift the fit claims to describe (r_k^2 + 1)
  window            from, to (exclusive) and the samples used
  classes           per residue mod r_k: coefficients from the highest
                    power of n down, as exact fractions
  absent_classes    residues with no admissible shift
  verification      points (n, value), checked, exact, and the first
                    mismatch with the predicted fraction";

#[derive(Debug, Parser)]
#[command(
    name = "apery",
    version,
    about = "Apéry sets and invariants of numerical monoids"
)]
#[command(after_long_help = TOP_HELP)]
pub struct Cli {
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Leave timings out of the output
    #[arg(long, global = true)]
    pub no_time: bool,

    /// Worker threads for scan and bench
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    /// Reserved; currently unused
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Largest Apéry set (number of elements) any command may build
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_apery: u64,

    /// Give up on the classic algorithm after this many seconds
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apéry set of a monoid
    #[command(after_long_help = APERY_HELP)]
    Apery(AperyArgs),
    /// Frobenius number, genus, pseudo-Frobenius numbers, type, Wilf number
    #[command(after_long_help = INVARIANTS_HELP)]
    Invariants(InvariantsArgs),
    /// Invariants of the members of a shifted family over a range of shifts
    #[command(after_long_help = SCAN_HELP)]
    Scan(ScanArgs),
    /// Classic versus fast timings over a list of shifts
    #[command(after_long_help = BENCH_HELP)]
    Bench(BenchArgs),
    /// Exact quasipolynomial fit of an invariant in the shift
    #[command(after_long_help = FIT_HELP)]
    Fit(FitArgs),
}

#[derive(Debug, Args)]
pub struct AperyArgs {
    /// Comma-separated generators, e.g. 10,12,13
    #[arg(value_parser = parse_generators)]
    pub generators: GeneratorList,

    /// Element to take the Apéry set with respect to (default: multiplicity)
    #[arg(long)]
    pub x: Option<u64>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Comma-separated generators, e.g. 10,12,13
    #[arg(value_parser = parse_generators)]
    pub generators: GeneratorList,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Base generators r_1, ..., r_k
    #[arg(long, value_parser = parse_generators)]
    pub base: GeneratorList,

    /// First shift (inclusive)
    #[arg(long)]
    pub from: u64,

    /// Last shift (inclusive)
    #[arg(long)]
    pub to: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Base generators r_1, ..., r_k
    #[arg(long, value_parser = parse_generators, default_value = "6,9,20")]
    pub base: GeneratorList,

    /// Shifts to time
    #[arg(long, value_parser = parse_generators, default_value = "50,200,400,1000,5000,10000")]
    pub shifts: GeneratorList,

    /// Repetitions per measurement (at least 3); the median is reported
    #[arg(long, default_value_t = 5)]
    pub reps: usize,

    /// Per-run limit for the classic algorithm, in seconds
    #[arg(long, default_value_t = 60.0)]
    pub cutoff_secs: f64,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Base generators r_1, ..., r_k
    #[arg(long, value_parser = parse_generators)]
    pub base: GeneratorList,

    /// frobenius, genus, wilf or type
    #[arg(long)]
    pub invariant: Invariant,

    /// Degree of the fit (default: 2, or 0 for type)
    #[arg(long)]
    pub degree: Option<usize>,

    /// First shift of the sampling window (default: r_k^2 + 1)
    #[arg(long)]
    pub from: Option<u64>,

    /// Admissible shifts past the window to verify against
    #[arg(long, default_value_t = 12)]
    pub holdout: usize,
}

/// A comma-separated list taken as a single argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorList(pub Vec<u64>);

fn parse_generators(text: &str) -> Result<GeneratorList, String> {
    let gens = apery_core::parse_generators(text).map_err(|e| format!("{text:?}: {e}"))?;
    if gens.is_empty() {
        return Err("expected at least one integer".into());
    }
    Ok(GeneratorList(gens))
}
