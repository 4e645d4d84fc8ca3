//! The `circodes` command line, as a library function so it can be driven
//! from tests.
//!
//! Exit codes: 0 success, 1 failed predicate or failed precondition,
//! 2 usage or parse error, 3 search stopped by its time budget.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::code::Code;
use crate::constructions::{gamma_id, gamma_ld, id_code, GammaKind, GammaSource};
use crate::error::Error;
use crate::graph::CirculantGraph;
use crate::search::{self, Method, SearchConfig, SearchResult, WORKERS_ENV};
use crate::share::{self, Family, PatternScan, Scheme, ShareLedger};
use crate::verify::{verify, CodeKind, VerifyReport, Witness};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "circodes", version, about = "Identifying and locating-dominating codes in circulant graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Dom,
    Id,
    Ld,
}

impl From<KindArg> for CodeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Dom => CodeKind::Dominating,
            KindArg::Id => CodeKind::Identifying,
            KindArg::Ld => CodeKind::LocatingDominating,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GammaKindArg {
    Id,
    Ld,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Id,
    Ld,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Id,
    Ld,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    ExhaustiveBb,
    Mitm,
    Auto,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether a code is dominating, identifying or locating-dominating.
    Verify {
        #[command(flatten)]
        target: GraphCode,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Print the closed-form identifying code of C_n(1,3).
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GammaKindArg::Id)]
        kind: GammaKindArg,
    },
    /// Exact shares and the shifting ledger.
    Share {
        #[command(flatten)]
        target: GraphCode,
        #[arg(long, value_enum, default_value_t = SchemeArg::None)]
        scheme: SchemeArg,
    },
    /// Pattern occurrences in a code of C_n(1,3).
    Patterns {
        #[command(flatten)]
        target: GraphCode,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Exact minimum size, or a single decision with --target.
    Search(SearchArgs),
    /// Table of γ values, optionally checked against search.
    Gamma {
        #[arg(long, value_enum)]
        kind: GammaKindArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        check_by_search: bool,
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct GraphCode {
    /// Graph literal such as C46(1,3).
    #[arg(long)]
    graph: String,
    /// Vertex list (0,1,4,5) or x/o string of length n.
    #[arg(long, allow_hyphen_values = true)]
    code: String,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Decide whether a code of exactly this size exists.
    #[arg(long)]
    target: Option<usize>,
    /// Time budget in seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long, env = WORKERS_ENV)]
    workers: Option<usize>,
    /// Search all codes instead of only those containing vertex 0.
    #[arg(long)]
    no_fix_zero: bool,
    /// Also prove that one codeword fewer than the lower bound is impossible.
    #[arg(long)]
    certify_floor: bool,
    /// Do not stop at the size of a known construction.
    #[arg(long)]
    no_construction: bool,
    /// Emit one JSON progress record per milestone on stderr.
    #[arg(long)]
    progress: bool,
}

struct Ctx {
    format: Format,
    out: String,
    err: String,
}

impl Ctx {
    fn emit<T: Serialize>(&mut self, value: &T, human: impl FnOnce(&mut String)) {
        match self.format {
            Format::Json => {
                self.out.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
                self.out.push('\n');
            }
            Format::Human => human(&mut self.out),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidGraph(_) | Error::VertexOutOfRange { .. } | Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(describe(&other)),
        }
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Precondition { message, report: Some(r) } => match &r.witness {
            Some(w) => format!("precondition failed: {message} ({})", witness_text(w)),
            None => format!("precondition failed: {message}"),
        },
        other => other.to_string(),
    }
}

/// Runs the command line. `argv` includes the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut ctx = Ctx { format: cli.format, out: String::new(), err: String::new() };
    let code = match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            EXIT_FAIL
        }
    };
    Output { code, stdout: ctx.out, stderr: ctx.err }
}

fn parse_target(t: &GraphCode) -> Result<(CirculantGraph, Code), Failure> {
    let g: CirculantGraph = t.graph.parse()?;
    let c = Code::parse(&t.code, g.n())?;
    Ok((g, c))
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Result<u8, Failure> {
    match cmd {
        Command::Verify { target, kind } => cmd_verify(ctx, &target, kind.into()),
        Command::Construct { n, kind } => cmd_construct(ctx, n, kind),
        Command::Share { target, scheme } => cmd_share(ctx, &target, scheme),
        Command::Patterns { target, family } => cmd_patterns(ctx, &target, family),
        Command::Search(args) => cmd_search(ctx, &args),
        Command::Gamma { kind, from, to, check_by_search, workers } => {
            cmd_gamma(ctx, kind, from, to, check_by_search, workers)
        }
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Uncovered { vertex } => format!("vertex {vertex} is not covered"),
        Witness::Pair { u, v } => format!("vertices {u} and {v} have the same I-set"),
    }
}

fn report_text(s: &mut String, r: &VerifyReport) {
    let _ = match &r.witness {
        None => writeln!(s, "{}: yes", r.kind),
        Some(w) => writeln!(s, "{}: no, {}", r.kind, witness_text(w)),
    };
}

fn code_text(s: &mut String, c: &Code) {
    let _ = writeln!(s, "code ({} codewords): {}", c.len(), c.to_list());
    let _ = writeln!(s, "pattern: {}", c.to_pattern());
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    graph: &'a CirculantGraph,
    code: &'a Code,
    report: &'a VerifyReport,
}

fn cmd_verify(ctx: &mut Ctx, t: &GraphCode, kind: CodeKind) -> Result<u8, Failure> {
    let (g, c) = parse_target(t)?;
    let report = verify(&g, &c, kind)?;
    ctx.emit(&VerifyOut { graph: &g, code: &c, report: &report }, |s| {
        let _ = writeln!(s, "graph: {g}");
        code_text(s, &c);
        report_text(s, &report);
    });
    Ok(if report.ok { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct ConstructOut<'a> {
    graph: &'a CirculantGraph,
    kind: GammaKind,
    size: usize,
    gamma: usize,
    code: &'a Code,
    report: &'a VerifyReport,
}

fn cmd_construct(ctx: &mut Ctx, n: usize, kind: GammaKindArg) -> Result<u8, Failure> {
    if kind == GammaKindArg::Ld {
        return Err(Failure::Usage(
            "no closed-form locating-dominating construction is provided; use `search --kind ld`".into(),
        ));
    }
    if n < 11 {
        return Err(Failure::Usage(format!("the construction covers n >= 11, got {n}")));
    }
    let g = CirculantGraph::c13(n)?;
    let c = id_code(n)?;
    let report = verify(&g, &c, CodeKind::Identifying)?;
    let gamma = gamma_id(n)?;
    ctx.emit(
        &ConstructOut { graph: &g, kind: GammaKind::Id, size: c.len(), gamma, code: &c, report: &report },
        |s| {
            let _ = writeln!(s, "graph: {g}");
            code_text(s, &c);
            let _ = writeln!(s, "gamma_id: {gamma}");
            report_text(s, &report);
        },
    );
    Ok(if report.ok { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct ShareOut<'a> {
    graph: &'a CirculantGraph,
    code: &'a Code,
    ledger: &'a ShareLedger,
    base_total: crate::rational::Rational,
    modified_total: crate::rational::Rational,
}

fn cmd_share(ctx: &mut Ctx, t: &GraphCode, scheme: SchemeArg) -> Result<u8, Failure> {
    let (g, c) = parse_target(t)?;
    let scheme = match scheme {
        SchemeArg::Id => Scheme::Id,
        SchemeArg::Ld => Scheme::Ld,
        SchemeArg::None => Scheme::None,
    };
    let ledger = share::share_ledger(&g, &c, scheme)?;
    let out = ShareOut {
        graph: &g,
        code: &c,
        ledger: &ledger,
        base_total: ledger.base_total(),
        modified_total: ledger.modified_total(),
    };
    ctx.emit(&out, |s| {
        let _ = writeln!(s, "graph: {g}, scheme: {scheme}");
        for (w, b) in &ledger.base {
            let _ = writeln!(s, "  {w:>4}  s = {b:<8} s̄ = {}", ledger.modified[w]);
        }
        for tr in &ledger.transfers {
            let _ = writeln!(s, "  {:<7} {} -> {}  {}", tr.rule, tr.from, tr.to, tr.amount);
        }
        let _ = writeln!(s, "total: {}", out.base_total);
    });
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PatternsOut<'a> {
    graph: &'a CirculantGraph,
    code: &'a Code,
    family: Family,
    #[serde(flatten)]
    scan: &'a PatternScan,
}

fn cmd_patterns(ctx: &mut Ctx, t: &GraphCode, family: FamilyArg) -> Result<u8, Failure> {
    let (g, c) = parse_target(t)?;
    if !g.is_c13_proper() {
        return Err(Failure::Domain(format!("patterns are defined on C_n(1,3) with n >= 7, not on {g}")));
    }
    let family = match family {
        FamilyArg::Id => Family::Id,
        FamilyArg::Ld => Family::Ld,
    };
    let scan = share::detect_patterns(&c, family);
    ctx.emit(&PatternsOut { graph: &g, code: &c, family, scan: &scan }, |s| {
        let _ = writeln!(s, "graph: {g}");
        for o in &scan.occurrences {
            let owner = o.owner.map(|v| format!(", owner {v}")).unwrap_or_default();
            let orient = match o.orientation {
                share::Orientation::Normal => "normal",
                share::Orientation::Mirrored => "mirrored",
            };
            let _ = writeln!(s, "  {:<3} at {:>4} {orient}{owner}", o.pattern.name(), o.anchor);
        }
        if scan.occurrences.is_empty() {
            let _ = writeln!(s, "  no occurrences");
        }
        for k in &scan.unscannable {
            let _ = writeln!(s, "  {} not scanned: window longer than n", k.name());
        }
    });
    Ok(EXIT_OK)
}

fn search_config(args: &SearchArgs) -> Result<SearchConfig, Failure> {
    let mut cfg = SearchConfig::new(args.kind.into()).method(match args.method {
        MethodArg::ExhaustiveBb => Method::ExhaustiveBb,
        MethodArg::Mitm => Method::Mitm,
        MethodArg::Auto => Method::Auto,
    });
    if let Some(w) = args.workers {
        if w == 0 {
            return Err(Failure::Usage("--workers must be positive".into()));
        }
        cfg = cfg.workers(w);
    }
    if let Some(t) = args.target {
        if t == 0 {
            return Err(Failure::Usage("--target must be at least 1".into()));
        }
        cfg = cfg.target(t);
    }
    if let Some(b) = args.time_budget {
        if !(b.is_finite() && b >= 0.0) {
            return Err(Failure::Usage("--time-budget must be a nonnegative number of seconds".into()));
        }
        cfg = cfg.time_budget(Duration::from_secs_f64(b));
    }
    cfg.fix_zero = !args.no_fix_zero;
    cfg.certify_floor = args.certify_floor;
    cfg.use_construction = !args.no_construction;
    Ok(cfg)
}

fn search_text(s: &mut String, r: &SearchResult) {
    let _ = writeln!(s, "graph: {}, kind: {}, lower bound {}", r.graph, r.kind, r.floor);
    if r.no_code_exists {
        let _ = writeln!(s, "no code exists: two vertices have equal closed neighbourhoods");
        return;
    }
    match (r.target, r.feasible, r.min_size) {
        (Some(k), Some(true), _) => {
            let _ = writeln!(s, "size {k}: feasible");
        }
        (Some(k), Some(false), _) => {
            let _ = writeln!(s, "size {k}: infeasible");
        }
        (_, _, Some(m)) => {
            let _ = writeln!(s, "minimum size: {m}");
        }
        _ => {}
    }
    if !r.complete {
        let _ = writeln!(s, "time budget exhausted; result incomplete");
    }
    if let Some(w) = &r.witness {
        code_text(s, w);
    }
    for c in &r.certificates {
        let _ = writeln!(s, "size {} exhaustively infeasible ({}, {} nodes)", c.k, c.method, c.nodes);
    }
    for h in &r.stats.half_counts {
        let _ = writeln!(
            s,
            "half {}..={} window {}..={} size {}: {} codes",
            h.range[0], h.range[1], h.window[0], h.window[1], h.size, h.count
        );
    }
    let _ = writeln!(s, "nodes: {}, wall time: {} ms", r.stats.nodes, r.stats.wall_time_ms);
}

fn cmd_search(ctx: &mut Ctx, args: &SearchArgs) -> Result<u8, Failure> {
    let g: CirculantGraph = args.graph.parse()?;
    let cfg = search_config(args)?;
    let lines = std::sync::Mutex::new(String::new());
    let sink = |p: &search::Progress| {
        if args.progress {
            let mut l = lines.lock().unwrap();
            l.push_str(&serde_json::to_string(p).expect("serializable"));
            l.push('\n');
        }
    };
    let r = search::min_code_size_with(&g, &cfg, &sink)?;
    ctx.err.push_str(&lines.into_inner().unwrap());
    ctx.emit(&r, |s| search_text(s, &r));
    if !r.complete {
        return Ok(EXIT_BUDGET);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GammaRow {
    n: usize,
    value: usize,
    source: GammaSource,
    #[serde(skip_serializing_if = "Option::is_none")]
    search: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

fn cmd_gamma(
    ctx: &mut Ctx,
    kind: GammaKindArg,
    from: usize,
    to: usize,
    check: bool,
    workers: Option<usize>,
) -> Result<u8, Failure> {
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..={to}")));
    }
    let (gk, ck, min_n) = match kind {
        GammaKindArg::Id => (GammaKind::Id, CodeKind::Identifying, 11),
        GammaKindArg::Ld => (GammaKind::Ld, CodeKind::LocatingDominating, 13),
    };
    if from < min_n {
        return Err(Failure::Usage(format!("the formula covers n >= {min_n}; values below are not tabulated")));
    }
    if check && to > search::MAX_N {
        return Err(Failure::Usage(format!("--check-by-search supports n <= {}", search::MAX_N)));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        let value = match gk {
            GammaKind::Id => gamma_id(n)?,
            GammaKind::Ld => gamma_ld(n)?,
        };
        let (found, matches) = if check {
            let mut cfg = SearchConfig::new(ck);
            if let Some(w) = workers.filter(|&w| w > 0) {
                cfg = cfg.workers(w);
            }
            cfg.use_construction = false;
            let r = search::min_code_size(&CirculantGraph::c13(n)?, &cfg)?;
            (r.min_size, Some(r.min_size == Some(value)))
        } else {
            (None, None)
        };
        rows.push(GammaRow { n, value, source: GammaSource::Formula, search: found, matches });
    }
    let mismatch = rows.iter().any(|r| r.matches == Some(false));
    let name = match gk {
        GammaKind::Id => "id",
        GammaKind::Ld => "ld",
    };
    ctx.emit(&json!({ "kind": gk, "rows": rows }), |s| {
        let _ = writeln!(s, "gamma_{name}");
        for r in &rows {
            let _ = match (r.search, r.matches) {
                (Some(v), Some(true)) => writeln!(s, "{:>4}: {} (search {v})", r.n, r.value),
                (found, Some(false)) => {
                    writeln!(s, "{:>4}: {} MISMATCH (search {:?})", r.n, r.value, found)
                }
                _ => writeln!(s, "{:>4}: {}", r.n, r.value),
            };
        }
    });
    if mismatch {
        let _ = writeln!(ctx.err, "formula and search disagree");
        return Ok(EXIT_FAIL);
    }
    Ok(EXIT_OK)
}
