//! Command-line front end.
//!
//! Every subcommand validates its parameters, runs one library operation and
//! prints either a human table or structured records (one JSON object per
//! line, schema `lettermethod/1`). Records contain no timing data unless
//! `--stats` is given, so identical configurations print identical bytes.
//!
//! Exit codes: 0 all checks pass, 1 a checked inequality or invariant
//! failed, 2 an input file could not be read or parsed, 3 a search budget
//! was exhausted, 4 invalid usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::ratio;
use crate::bounds::{
    factorial_bound_check, kst_parameters, theorem3_bound, theorem6_bound, BoundsError, ConstantMode,
    KHTSR_EMPIRICAL_CONSTANT, KHT_CONSTANT,
};
use crate::drc::{drc_check, sweep, DrcBudget, DrcError, DrcInstance, SweepConfig};
use crate::extremal::{
    ex_exact, f_exact, verify_lemma1, ExtremalRecord, Forbidden, RecordCache, RecordKind, RecordParams, SearchError,
    Witness,
};
use crate::hypercore::{build_k_h_t, build_k_h_t_s_r, complete, cycle, matching, Hypergraph, HypergraphError};
use crate::lettering::{lemma2_audit, LetteredHypergraph, LetteringError};
use crate::matrix01::{inflate, mat_ex_exact, polarity_construction, stack, Matrix01, MatrixError};
use crate::search::Budget;

pub const SCHEMA: &str = "lettermethod/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Violation = 1,
    ParseError = 2,
    BudgetExceeded = 3,
    Usage = 4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Constant {
    Eight,
    E,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "lettermethod", version, about = "Exact Turán-type computations for hypergraphs and 0-1 matrices")]
pub struct RunConfig {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// worker threads for searches and sweeps
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// node budget per search
    #[arg(long, global = true)]
    pub max_nodes: Option<u64>,
    /// wall-clock budget per search
    #[arg(long, global = true)]
    pub max_seconds: Option<f64>,
    /// seed for every randomized step
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// include node counts and wall time (breaks byte-reproducibility)
    #[arg(long, global = true)]
    #[serde(skip)]
    pub stats: bool,
    /// ignore LETTERMETHOD_CACHE
    #[arg(long, global = true)]
    #[serde(skip)]
    pub no_cache: bool,
}

impl Common {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.max_nodes, max_seconds: self.max_seconds, workers: self.workers.max(1) }
    }
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// exact ex_d(n, H)
    ExSearch {
        /// file or builtin: matching:D:S, cycle:L, complete:D:N, kst:S:T
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        n: usize,
    },
    /// exact f_d(n, k, H)
    FSearch {
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// exact ex(n, Q, d) for a 0-1 matrix pattern
    MatEx {
        /// file or builtin: ones:AxB[xC..], rows:R1,R2,.., polarity:Q
        #[arg(long = "Q")]
        q: String,
        #[arg(long)]
        n: usize,
    },
    /// ex_d(n, H) <= k (f_d(n, k, H) + n) with both sides exact
    VerifyLemma1 {
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// counting audit on a lettered (d+1)-uniform hypergraph
    Lemma2Audit {
        /// lettered hypergraph file
        #[arg(long = "L")]
        l: PathBuf,
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        t: usize,
        /// ex_d(n, H); computed exactly when omitted
        #[arg(long)]
        ex: Option<u64>,
        /// search the host for K_{H,t} first
        #[arg(long)]
        check_free: bool,
    },
    /// parameters and bounds next to exact values for n in a range
    BoundsTable {
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Constant::Eight)]
        constant: Constant,
        /// also search ex_{d+1}(n, K_{H,t}) exactly
        #[arg(long)]
        exact: bool,
    },
    /// 8^t t! > t^t and the doubling steps for 2 <= t <= tmax
    FactorialCheck {
        #[arg(long)]
        tmax: u64,
    },
    /// dependent random choice on one instance, or an exhaustive sweep
    DrcCheck {
        #[arg(long = "G")]
        g: Option<String>,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        x: u64,
        #[arg(long, default_value_t = 1)]
        a: u64,
        /// random samples when exhaustive search is too large
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long)]
        sweep: bool,
        /// sweep: vertices
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// sweep: uniformity d + 1
        #[arg(long, default_value_t = 3)]
        uniformity: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        /// sweep: check a seeded sample of this many hypergraphs
        #[arg(long)]
        sample: Option<usize>,
    },
    /// build a hypergraph or matrix
    #[command(subcommand)]
    Construct(Construct),
    /// the lettering inequality over a grid of (H, n, k)
    Sweep {
        /// forbidden hypergraphs; defaults to the standard small grid
        #[arg(long = "H")]
        h: Vec<String>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construct {
    /// K_{H,t}
    Kht {
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        t: usize,
    },
    /// K_{H,t,s,r}
    Khtsr {
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
    },
    /// t copies of P stacked along a new dimension
    Stack {
        #[arg(long = "P")]
        p: String,
        #[arg(long)]
        t: usize,
    },
    /// projective-plane polarity matrix of order q
    Polarity {
        #[arg(long)]
        q: usize,
    },
    /// lift a square matrix to d + 1 dimensions
    Inflate {
        #[arg(long = "M")]
        m: String,
        #[arg(long)]
        d: usize,
    },
    /// s disjoint d-sets
    Matching {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
    },
}

/// Failures that stop a command before it produces a result.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("violated: {0}")]
    Violation(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Parse(_) => ExitStatus::ParseError,
            CliError::Usage(_) | CliError::Io(_) => ExitStatus::Usage,
            CliError::Budget(_) => ExitStatus::BudgetExceeded,
            CliError::Violation(_) => ExitStatus::Violation,
        }
    }
}

impl From<HypergraphError> for CliError {
    fn from(e: HypergraphError) -> Self {
        match e {
            HypergraphError::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<LetteringError> for CliError {
    fn from(e: LetteringError) -> Self {
        match e {
            LetteringError::Hypergraph(h) => h.into(),
            LetteringError::NotKHtFree(_) => CliError::Violation(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            SearchError::Hypergraph(h) => h.into(),
            SearchError::Matrix(m) => m.into(),
            SearchError::Lettering(l) => l.into(),
            SearchError::CorruptRecord { .. } | SearchError::InvalidWitness(_) => CliError::Violation(e.to_string()),
            SearchError::InvalidParameter(_) | SearchError::Io(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DrcError> for CliError {
    fn from(e: DrcError) -> Self {
        match e {
            DrcError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                ExitStatus::Usage as i32
            } else {
                let _ = write!(out, "{text}");
                ExitStatus::Ok as i32
            };
        }
    };
    match run(&config, out) {
        Ok(status) => status as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.status() as i32
        }
    }
}

/// Runs one configured command, writing its report to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let ctx = Ctx { common: &config.common, command: &config.command };
    match &config.command {
        Command::ExSearch { h, n } => {
            let h = load_hypergraph(h)?;
            let record = cached_search(&ctx, RecordKind::ExHypergraph, *n, h.uniformity(), None, &h.digest(), || {
                ex_exact(*n, &h, &ctx.common.budget())
            })?;
            emit_record(&ctx, out, &record)
        }
        Command::FSearch { h, n, k } => {
            let h = load_hypergraph(h)?;
            let record = cached_search(&ctx, RecordKind::FLettered, *n, h.uniformity(), Some(*k), &h.digest(), || {
                f_exact(*n, *k, &h, &ctx.common.budget())
            })?;
            emit_record(&ctx, out, &record)
        }
        Command::MatEx { q, n } => {
            let q = load_matrix(q)?;
            let record = cached_search(&ctx, RecordKind::ExMatrix, *n, q.dimension(), None, &q.digest(), || {
                mat_ex_exact(*n, &q, &ctx.common.budget())
            })?;
            emit_record(&ctx, out, &record)
        }
        Command::VerifyLemma1 { h, n, k } => {
            let h = load_hypergraph(h)?;
            if *k == 0 {
                return Err(CliError::Usage("k must be at least 1".into()));
            }
            let report = verify_lemma1(*n, *k, &h, &ctx.common.budget())?;
            let ok = report.holds && report.transform_ok;
            let mut table = String::new();
            writeln!(table, "n = {}, d = {}, k = {}", report.n, report.d, report.k).unwrap();
            writeln!(table, "ex = {}", report.ex).unwrap();
            writeln!(table, "f = {}", report.f).unwrap();
            writeln!(table, "k (f + n) = {}", report.rhs).unwrap();
            writeln!(table, "ex <= k (f + n): {}", verdict(report.holds)).unwrap();
            writeln!(
                table,
                "greedy lettering of the ex witness: {} letters, {} edges deleted: {}",
                report.transform_letters,
                report.transform_deleted,
                verdict(report.transform_ok)
            )
            .unwrap();
            emit(&ctx, out, &report, ok, table)
        }
        Command::Lemma2Audit { l, h, t, ex, check_free } => {
            let text = std::fs::read_to_string(l).map_err(|e| CliError::Parse(format!("{}: {e}", l.display())))?;
            let lettered = LetteredHypergraph::parse_text(&text).map_err(|e| match e {
                LetteringError::Hypergraph(h) => CliError::from(h),
                other => CliError::Parse(other.to_string()),
            })?;
            let h = load_hypergraph(h)?;
            let n = lettered.base().vertex_count();
            let ex_value = match ex {
                Some(v) => *v,
                None => ex_exact(n, &h, &ctx.common.budget())?.exact_value()? as u64,
            };
            let audit = lemma2_audit(&lettered, &h, *t, ex_value, *check_free)?;
            let ok = audit.verdicts.all();
            let v = &audit.verdicts;
            let mut table = String::new();
            writeln!(table, "n = {}, d = {}, t = {}, k = {}, r = {}", audit.n, audit.d, audit.t, audit.k, audit.r)
                .unwrap();
            writeln!(table, "edges = {}, ex_d(n, H) = {}, p = {}", audit.edge_count, audit.ex_value, audit.p).unwrap();
            writeln!(table, "sum deg(z) = |E| = k r: {}", verdict(v.partition_identity)).unwrap();
            writeln!(
                table,
                "sum C(deg(z), t) = {} <= C(r, t) ex = {}: {}",
                audit.tuple_count,
                audit.pigeonhole_bound,
                verdict(v.pigeonhole)
            )
            .unwrap();
            writeln!(
                table,
                "excess {} <= tuples {}: {}",
                audit.excess_sum,
                audit.tuple_count,
                verdict(v.excess_below_tuples)
            )
            .unwrap();
            writeln!(
                table,
                "(t-1) p = {} >= k r - excess = {}: {}",
                audit.chain_lhs,
                audit.chain_rhs,
                verdict(v.chain)
            )
            .unwrap();
            writeln!(table, "p = {} <= C(n, d) = {}: {}", audit.p, audit.binom_n_d, verdict(v.p_bounded)).unwrap();
            emit(&ctx, out, &audit, ok, table)
        }
        Command::BoundsTable { h, t, n_min, n_max, constant, exact } => {
            bounds_table(&ctx, out, &load_hypergraph(h)?, *t, *n_min, *n_max, *constant, *exact)
        }
        Command::FactorialCheck { tmax } => {
            let report = factorial_bound_check(*tmax)?;
            let mut table = format!("checked {} inequalities for 2 <= t <= {}\n", report.checks, report.t_max);
            match &report.first_failure {
                None => table.push_str("all hold\n"),
                Some(f) => writeln!(table, "first failure at t = {}: {}", f.t, f.step).unwrap(),
            }
            emit(&ctx, out, &report, report.passed, table)
        }
        Command::DrcCheck { g, t, r, x, a, samples, sweep: run_sweep, n, uniformity, max_edges, sample } => {
            if *run_sweep {
                let config = SweepConfig {
                    n: *n,
                    uniformity: *uniformity,
                    max_edges: *max_edges,
                    t_max: *t,
                    r_max: *r,
                    sample: *sample,
                    seed: ctx.common.seed.unwrap_or(0),
                    workers: ctx.common.workers,
                };
                if sample.is_some() && ctx.common.seed.is_none() {
                    return Err(CliError::Usage("--sample needs --seed".into()));
                }
                let report = sweep(&config)?;
                let mut table = format!(
                    "{} hypergraphs, {} instances, hypothesis held in {}\n",
                    report.hypergraphs, report.instances, report.hypothesis_held
                );
                writeln!(table, "violations: {}", report.violations.len()).unwrap();
                for v in report.violations.iter().take(10) {
                    writeln!(table, "  t={} r={} x={} a={} edges={:?}: {}", v.t, v.r, v.x, v.a, v.edges, v.reason)
                        .unwrap();
                }
                return emit(&ctx, out, &report, report.passed(), table);
            }
            let g = g.as_deref().ok_or_else(|| CliError::Usage("--G is required without --sweep".into()))?;
            let inst = DrcInstance::new(load_hypergraph(g)?, *t, *r, *x, *a)?;
            let budget = DrcBudget { samples: *samples, seed: ctx.common.seed, ..DrcBudget::default() };
            let report = drc_check(&inst, &budget)?;
            let mut table = String::new();
            writeln!(
                table,
                "n = {}, m = {}, d = {}, t = {}, r = {}, x = {}, a = {}",
                report.n, report.m, report.d, report.t, report.r, report.x, report.a
            )
            .unwrap();
            writeln!(
                table,
                "hypothesis left side = {}: {}",
                fraction(&report.hypothesis_lhs),
                holds_word(report.hypothesis_holds)
            )
            .unwrap();
            writeln!(
                table,
                "E[X] = {} >= {} >= {}: {}",
                fraction(&report.ex.exact),
                fraction(&report.ex.convexity),
                fraction(&report.ex.jensen_bound),
                verdict(report.ex.jensen_holds)
            )
            .unwrap();
            writeln!(
                table,
                "E[Y] = {} <= {}: {}",
                fraction(&report.ey.exact),
                fraction(&report.ey.bound),
                verdict(report.ey.bound_holds)
            )
            .unwrap();
            match &report.witness {
                Some(w) => writeln!(
                    table,
                    "A = {:?} (|B| = {}, removed {}): {}",
                    w.set,
                    w.joint_size,
                    w.removed,
                    verdict(report.witness_valid)
                )
                .unwrap(),
                None => writeln!(table, "no set of size {} found", report.a).unwrap(),
            }
            writeln!(table, "conclusion: {}", verdict(report.conclusion_holds)).unwrap();
            emit(&ctx, out, &report, report.passed(), table)
        }
        Command::Construct(c) => construct(&ctx, out, c),
        Command::Sweep { h, n_max, k_max } => lettering_sweep(&ctx, out, h, *n_max, *k_max),
    }
}

struct Ctx<'a> {
    common: &'a Common,
    command: &'a Command,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "VIOLATED"
    }
}

fn holds_word(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "does not hold"
    }
}

fn fraction(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn emit<T: Serialize>(
    ctx: &Ctx,
    out: &mut dyn Write,
    result: &T,
    ok: bool,
    table: String,
) -> Result<ExitStatus, CliError> {
    match ctx.common.format {
        Format::Table => write!(out, "{table}")?,
        Format::Records => {
            let line = json!({
                "schema": SCHEMA,
                "command": ctx.command,
                "config": ctx.common,
                "ok": ok,
                "result": result,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(if ok { ExitStatus::Ok } else { ExitStatus::Violation })
}

fn emit_record(ctx: &Ctx, out: &mut dyn Write, record: &ExtremalRecord) -> Result<ExitStatus, CliError> {
    let status = if record.exact { ExitStatus::Ok } else { ExitStatus::BudgetExceeded };
    match ctx.common.format {
        Format::Table => {
            let p = &record.params;
            let name = match record.kind {
                RecordKind::ExHypergraph => format!("ex_{}({}, H)", p.d, p.n),
                RecordKind::FLettered => format!("f_{}({}, {}, H)", p.d, p.n, p.k.unwrap_or(0)),
                RecordKind::ExMatrix => format!("ex({}, Q, {})", p.n, p.d),
            };
            let tag = if record.exact { "exact" } else { "lower bound, budget exhausted" };
            writeln!(out, "{name} = {} ({tag})", record.value)?;
            writeln!(out, "forbidden digest {}", p.forbidden_digest)?;
            writeln!(out, "witness:")?;
            match &record.witness {
                Witness::Hypergraph(g) => write!(out, "{}", g.to_text())?,
                Witness::Lettered(l) => write!(out, "{}", l.to_text())?,
                Witness::Matrix(m) => write!(out, "{}", m.text_grid().unwrap_or_else(|| m.to_text()))?,
            }
            if ctx.common.stats {
                writeln!(out, "nodes {} time {} ms", record.stats.nodes, record.stats.elapsed_ms)?;
            }
        }
        Format::Records => {
            let mut line = json!({
                "schema": SCHEMA,
                "command": ctx.command,
                "config": ctx.common,
                "ok": record.exact,
                "result": record,
            });
            if ctx.common.stats {
                line["stats"] = serde_json::to_value(record.stats).expect("stats serialize");
            }
            writeln!(out, "{line}")?;
        }
    }
    Ok(status)
}

fn cache(ctx: &Ctx) -> Option<RecordCache> {
    if ctx.common.no_cache {
        None
    } else {
        RecordCache::from_env()
    }
}

fn cached_search(
    ctx: &Ctx,
    kind: RecordKind,
    n: usize,
    d: usize,
    k: Option<usize>,
    digest: &str,
    search: impl FnOnce() -> Result<ExtremalRecord, SearchError>,
) -> Result<ExtremalRecord, CliError> {
    match cache(ctx) {
        Some(cache) => {
            let params = RecordParams { n, d, k, forbidden_digest: digest.to_string() };
            Ok(cache.get_or_compute(kind, &params, search)?)
        }
        None => Ok(search()?),
    }
}

fn parse_fields(source: &str, name: &str, count: usize) -> Result<Vec<usize>, CliError> {
    let fields: Vec<&str> = source.split(':').skip(1).collect();
    if fields.len() != count {
        return Err(CliError::Usage(format!("{name} takes {count} parameters: {source:?}")));
    }
    fields.iter().map(|f| f.parse().map_err(|_| CliError::Usage(format!("bad number {f:?} in {source:?}")))).collect()
}

/// A hypergraph from a builtin name or a file in the text format.
pub fn load_hypergraph(source: &str) -> Result<Hypergraph, CliError> {
    let head = source.split(':').next().unwrap_or_default();
    let built = match head {
        "matching" => {
            let f = parse_fields(source, head, 2)?;
            matching(f[0], f[1])?
        }
        "cycle" => cycle(parse_fields(source, head, 1)?[0])?,
        "complete" => {
            let f = parse_fields(source, head, 2)?;
            complete(f[0], f[1])?
        }
        "kst" => {
            let f = parse_fields(source, head, 2)?;
            build_k_h_t(&matching(1, f[0])?, f[1])?
        }
        _ => {
            let text = std::fs::read_to_string(source).map_err(|e| CliError::Parse(format!("{source}: {e}")))?;
            return Hypergraph::parse_text(&text).map_err(|e| CliError::Parse(format!("{source}: {e}")));
        }
    };
    Ok(built)
}

/// A matrix from a builtin name or a file in the text format.
pub fn load_matrix(source: &str) -> Result<Matrix01, CliError> {
    let (head, rest) = source.split_once(':').unwrap_or((source, ""));
    let built = match head {
        "ones" => {
            let dims: Result<Vec<usize>, _> = rest.split('x').map(str::parse).collect();
            Matrix01::all_ones(&dims.map_err(|_| CliError::Usage(format!("bad dimensions in {source:?}")))?)?
        }
        "rows" => Matrix01::from_rows(&rest.split(',').collect::<Vec<_>>())?,
        "polarity" => {
            polarity_construction(rest.parse().map_err(|_| CliError::Usage(format!("bad order in {source:?}")))?)?
        }
        _ => {
            let text = std::fs::read_to_string(source).map_err(|e| CliError::Parse(format!("{source}: {e}")))?;
            return Matrix01::parse_text(&text).map_err(|e| CliError::Parse(format!("{source}: {e}")));
        }
    };
    Ok(built)
}

#[derive(Serialize)]
struct ConstructResult {
    object: Forbidden,
    size: usize,
}

fn construct(ctx: &Ctx, out: &mut dyn Write, c: &Construct) -> Result<ExitStatus, CliError> {
    let object = match c {
        Construct::Kht { h, t } => Forbidden::Hypergraph(build_k_h_t(&load_hypergraph(h)?, *t)?),
        Construct::Khtsr { h, t, s, r } => Forbidden::Hypergraph(build_k_h_t_s_r(&load_hypergraph(h)?, *t, *s, *r)?),
        Construct::Stack { p, t } => Forbidden::Matrix(stack(&load_matrix(p)?, *t)?),
        Construct::Polarity { q } => Forbidden::Matrix(polarity_construction(*q)?),
        Construct::Inflate { m, d } => {
            let m = load_matrix(m)?;
            let side = m.dims()[0];
            Forbidden::Matrix(inflate(&m, *d, side)?)
        }
        Construct::Matching { d, s } => Forbidden::Hypergraph(matching(*d, *s)?),
    };
    let (table, size) = match &object {
        Forbidden::Hypergraph(g) => (g.to_text(), g.edge_count()),
        Forbidden::Matrix(m) => (m.text_grid().unwrap_or_else(|| m.to_text()), m.one_count()),
    };
    emit(ctx, out, &ConstructResult { object, size }, true, table)
}

#[derive(Serialize)]
struct BoundsRow {
    n: usize,
    ex: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    kht_bound: String,
    hypothesis_holds: bool,
    khtsr_bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kht_exact: Option<usize>,
    /// kht_exact / kht_bound
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<String>,
    within: bool,
}

#[derive(Serialize)]
struct BoundsTable {
    d: usize,
    t: u32,
    kht_constant: u64,
    khtsr_constant: u64,
    rows: Vec<BoundsRow>,
}

#[allow(clippy::too_many_arguments)]
fn bounds_table(
    ctx: &Ctx,
    out: &mut dyn Write,
    h: &Hypergraph,
    t: u32,
    n_min: usize,
    n_max: usize,
    constant: Constant,
    exact: bool,
) -> Result<ExitStatus, CliError> {
    let mode = match constant {
        Constant::Eight => ConstantMode::Eight,
        Constant::E => ConstantMode::EUpper,
    };
    let d = h.uniformity();
    let kht = build_k_h_t(h, t as usize)?;
    let c3 = ratio(KHT_CONSTANT, 1);
    let c6 = ratio(KHTSR_EMPIRICAL_CONSTANT, 1);
    let mut rows = Vec::new();
    for n in n_min.max(1)..=n_max {
        let budget = ctx.common.budget();
        let ex = cached_search(ctx, RecordKind::ExHypergraph, n, d, None, &h.digest(), || ex_exact(n, h, &budget))?
            .exact_value()?;
        let params = match kst_parameters(n as u64, d as u32, t, ex as u64, &mode) {
            Ok(p) => Some(p),
            Err(BoundsError::DegenerateEx) => None,
            Err(e) => return Err(e.into()),
        };
        let bound = theorem3_bound(n as u64, d as u32, t, ex as u64, &c3)?;
        let khtsr = theorem6_bound(n as u64, d as u32, t, ex as u64, &c6)?;
        let kht_exact = if exact {
            let budget = ctx.common.budget();
            Some(
                cached_search(ctx, RecordKind::ExHypergraph, n, d + 1, None, &kht.digest(), || {
                    ex_exact(n, &kht, &budget)
                })?
                .exact_value()?,
            )
        } else {
            None
        };
        let bound_u = bound.value.to_u64().unwrap_or(u64::MAX);
        rows.push(BoundsRow {
            n,
            ex,
            k: params.as_ref().map(|p| p.k.to_string()),
            r: params.as_ref().map(|p| p.r.to_string()),
            kht_bound: bound.value.to_string(),
            hypothesis_holds: bound.hypothesis_holds,
            khtsr_bound: khtsr.general.to_string(),
            kht_exact,
            ratio: kht_exact.map(|v| fraction(&ratio(v as u64, bound_u))),
            within: kht_exact.is_none_or(|v| v as u64 <= bound_u),
        });
    }
    let ok = rows.iter().all(|r| r.within);
    let mut table = format!(
        "d = {d}, t = {t}, K_(H,t) constant {KHT_CONSTANT}, K_(H,t,s,r) constant {KHTSR_EMPIRICAL_CONSTANT} (empirical)\n"
    );
    writeln!(
        table,
        "{:>4} {:>6} {:>8} {:>6} {:>12} {:>5} {:>12} {:>8} {:>10}",
        "n", "ex", "k", "r", "kht_bound", "hyp", "khtsr_bound", "exact", "ratio"
    )
    .unwrap();
    for r in &rows {
        writeln!(
            table,
            "{:>4} {:>6} {:>8} {:>6} {:>12} {:>5} {:>12} {:>8} {:>10}",
            r.n,
            r.ex,
            r.k.as_deref().unwrap_or("-"),
            r.r.as_deref().unwrap_or("-"),
            r.kht_bound,
            if r.hypothesis_holds { "yes" } else { "no" },
            r.khtsr_bound,
            r.kht_exact.map_or("-".to_string(), |v| v.to_string()),
            r.ratio.as_deref().unwrap_or("-"),
        )
        .unwrap();
    }
    let result = BoundsTable { d, t, kht_constant: KHT_CONSTANT, khtsr_constant: KHTSR_EMPIRICAL_CONSTANT, rows };
    emit(ctx, out, &result, ok, table)
}

/// The forbidden hypergraphs of the standard small grid, by builtin name.
pub const STANDARD_GRID: [&str; 5] = ["matching:1:2", "matching:1:3", "matching:2:2", "cycle:4", "kst:2:2"];

#[derive(Serialize)]
struct SweepRow {
    h: String,
    n: usize,
    k: usize,
    ex: usize,
    f: usize,
    rhs: usize,
    holds: bool,
    transform_ok: bool,
}

fn lettering_sweep(
    ctx: &Ctx,
    out: &mut dyn Write,
    sources: &[String],
    n_max: usize,
    k_max: usize,
) -> Result<ExitStatus, CliError> {
    let sources: Vec<String> =
        if sources.is_empty() { STANDARD_GRID.iter().map(|s| s.to_string()).collect() } else { sources.to_vec() };
    let mut rows = Vec::new();
    for source in &sources {
        let h = load_hypergraph(source)?;
        for n in 1..=n_max {
            for k in 1..=k_max {
                let report = verify_lemma1(n, k, &h, &ctx.common.budget())?;
                rows.push(SweepRow {
                    h: source.clone(),
                    n,
                    k,
                    ex: report.ex,
                    f: report.f,
                    rhs: report.rhs,
                    holds: report.holds,
                    transform_ok: report.transform_ok,
                });
            }
        }
    }
    let violations = rows.iter().filter(|r| !(r.holds && r.transform_ok)).count();
    let mut table =
        format!("{:>14} {:>3} {:>3} {:>4} {:>4} {:>9} {:>8}\n", "H", "n", "k", "ex", "f", "k(f+n)", "verdict");
    for r in &rows {
        writeln!(
            table,
            "{:>14} {:>3} {:>3} {:>4} {:>4} {:>9} {:>8}",
            r.h,
            r.n,
            r.k,
            r.ex,
            r.f,
            r.rhs,
            verdict(r.holds && r.transform_ok)
        )
        .unwrap();
    }
    writeln!(table, "{} cases, {} violations", rows.len(), violations).unwrap();
    let result: Value = json!({ "rows": rows, "violations": violations });
    emit(ctx, out, &result, violations == 0, table)
}
