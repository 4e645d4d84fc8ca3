//! Exact minimum-size search for dominating, identifying and
//! locating-dominating codes in circulant graphs with at most 128 vertices.
//!
//! [`min_code_size`] scans `k` upward from a lower bound and decides each `k`
//! with either branch and bound or meet in the middle. Every infeasible `k`
//! gets a certificate recording that the enumeration finished.

mod bb;
mod half;
mod linear;
mod masks;
mod mitm;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::code::Code;
use crate::constructions::{id_code, id_floor, ld_floor};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::verify::{verify, CodeKind};
use masks::Masks;

pub use half::{enumerate_half, for_each_half, HalfCount, HalfEnumeration};
pub use masks::MAX_N;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "CIRCODES_WORKERS";

/// Below this length `Method::Auto` uses branch and bound.
const AUTO_MITM_MIN_N: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExhaustiveBb,
    Mitm,
    Auto,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExhaustiveBb => "exhaustive-bb",
            Method::Mitm => "mitm",
            Method::Auto => "auto",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive-bb" | "bb" => Ok(Method::ExhaustiveBb),
            "mitm" => Ok(Method::Mitm),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::Parse(format!("unknown method {s:?} (expected exhaustive-bb, mitm or auto)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub kind: CodeKind,
    pub method: Method,
    /// Decide this single size instead of minimizing.
    pub target: Option<usize>,
    pub time_budget: Option<Duration>,
    pub workers: usize,
    /// Restrict branch and bound to codes containing vertex 0.
    pub fix_zero: bool,
    /// Also decide `floor - 1` and record its certificate.
    pub certify_floor: bool,
    /// Stop the scan at the size of a closed-form code when one is known.
    pub use_construction: bool,
}

impl SearchConfig {
    pub fn new(kind: CodeKind) -> Self {
        SearchConfig {
            kind,
            method: Method::Auto,
            target: None,
            time_budget: None,
            workers: default_workers(),
            fix_zero: true,
            certify_floor: false,
            use_construction: true,
        }
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn target(mut self, k: usize) -> Self {
        self.target = Some(k);
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

/// Worker count from [`WORKERS_ENV`], else the number of available cores.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Feasible,
    Infeasible,
    /// The time budget ran out first.
    Unknown,
}

#[derive(Clone, Debug)]
pub(crate) struct Decision {
    pub outcome: Outcome,
    pub witness: Option<u128>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub k: usize,
    pub method: Method,
    /// The enumeration ran to completion without finding a code.
    pub exhaustive: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub half_counts: Vec<HalfCount>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Optimize,
    Decide,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub graph: CirculantGraph,
    pub n: usize,
    pub kind: CodeKind,
    pub mode: Mode,
    pub target: Option<usize>,
    pub floor: usize,
    pub min_size: Option<usize>,
    pub feasible: Option<bool>,
    pub witness: Option<Code>,
    /// False when the time budget ran out before an answer was certain.
    pub complete: bool,
    /// Two vertices share a closed neighbourhood, so no identifying code
    /// exists.
    pub no_code_exists: bool,
    pub certificates: Vec<Certificate>,
    pub stats: SearchStats,
}

/// Line-delimited progress records.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum Progress {
    Start { n: usize, kind: CodeKind, floor: usize },
    HalfEnumerated(HalfCount),
    Decided { k: usize, method: Method, outcome: Outcome, nodes: u64 },
    UpperBound { k: usize, source: String },
}

pub type ProgressSink<'a> = &'a (dyn Fn(&Progress) + Sync);

/// Closed-form lower bound used to start the scan.
pub fn lower_bound(g: &CirculantGraph, kind: CodeKind) -> usize {
    let n = g.n();
    let generic = n.div_ceil(g.closed_size());
    let bound = match kind {
        CodeKind::Identifying if g.is_c13_proper() && n >= 11 => id_floor(n),
        CodeKind::LocatingDominating if g.is_c13_proper() && n >= 9 => ld_floor(n),
        _ => generic,
    };
    bound.max(1)
}

fn resolve(method: Method, m: &Masks) -> Method {
    match method {
        Method::Auto if mitm::applicable(m) && m.n >= AUTO_MITM_MIN_N => Method::Mitm,
        Method::Auto => Method::ExhaustiveBb,
        Method::Mitm if !mitm::applicable(m) => Method::ExhaustiveBb,
        other => other,
    }
}

struct Searcher<'a> {
    m: Masks,
    cfg: &'a SearchConfig,
    deadline: Option<Instant>,
    progress: ProgressSink<'a>,
    stats: SearchStats,
}

impl Searcher<'_> {
    fn decide(&mut self, k: usize) -> (Decision, Method) {
        let method = resolve(self.cfg.method, &self.m);
        let d = match method {
            Method::Mitm => {
                let sink = self.progress;
                let run = mitm::decide(&self.m, self.cfg.kind, k, self.deadline, &|h| {
                    sink(&Progress::HalfEnumerated(h.clone()))
                });
                self.stats.half_counts.extend(run.half_counts);
                run.decision
            }
            _ => bb::decide(&self.m, self.cfg.kind, k, self.cfg.fix_zero, self.deadline),
        };
        self.stats.nodes += d.nodes;
        (self.progress)(&Progress::Decided { k, method, outcome: d.outcome, nodes: d.nodes });
        (d, method)
    }
}

/// Decides a single size `k` with the configured method.
pub fn decide(g: &CirculantGraph, cfg: &SearchConfig, k: usize) -> Result<SearchResult> {
    min_code_size(g, &SearchConfig { target: Some(k), ..cfg.clone() })
}

pub fn min_code_size(g: &CirculantGraph, cfg: &SearchConfig) -> Result<SearchResult> {
    min_code_size_with(g, cfg, &|_| {})
}

/// [`min_code_size`] reporting milestones to `progress`.
pub fn min_code_size_with(g: &CirculantGraph, cfg: &SearchConfig, progress: ProgressSink<'_>) -> Result<SearchResult> {
    let start = Instant::now();
    if cfg.target == Some(0) {
        return Err(Error::precondition("target size must be at least 1"));
    }
    let m = Masks::new(g)?;
    let n = g.n();
    let floor = lower_bound(g, cfg.kind);
    let mode = if cfg.target.is_some() { Mode::Decide } else { Mode::Optimize };
    let mut res = SearchResult {
        graph: g.clone(),
        n,
        kind: cfg.kind,
        mode,
        target: cfg.target,
        floor,
        min_size: None,
        feasible: None,
        witness: None,
        complete: true,
        no_code_exists: false,
        certificates: Vec::new(),
        stats: SearchStats::default(),
    };
    if cfg.kind == CodeKind::Identifying && g.closed_twins().is_some() {
        res.no_code_exists = true;
        res.feasible = cfg.target.map(|_| false);
        return Ok(res);
    }
    progress(&Progress::Start { n, kind: cfg.kind, floor });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("cannot start worker pool: {e}")))?;
    let mut s = Searcher { m, cfg, deadline: cfg.time_budget.map(|b| start + b), progress, stats: SearchStats::default() };

    pool.install(|| -> Result<()> {
        if let Some(k) = cfg.target {
            let (d, method) = s.decide(k);
            match d.outcome {
                Outcome::Feasible => {
                    res.feasible = Some(true);
                    res.witness = Some(Code::from_mask(n, d.witness.expect("witness")));
                }
                Outcome::Infeasible => {
                    res.feasible = Some(false);
                    res.certificates.push(Certificate { k, method, exhaustive: true, nodes: d.nodes });
                }
                Outcome::Unknown => res.complete = false,
            }
            return Ok(());
        }
        if cfg.certify_floor && floor > 1 {
            let (d, method) = s.decide(floor - 1);
            match d.outcome {
                Outcome::Infeasible => {
                    res.certificates.push(Certificate { k: floor - 1, method, exhaustive: true, nodes: d.nodes })
                }
                Outcome::Feasible => {
                    return Err(Error::precondition(format!("a code of size {} beats the lower bound", floor - 1)))
                }
                Outcome::Unknown => res.complete = false,
            }
        }
        let known = if cfg.use_construction { known_code(g, cfg.kind) } else { None };
        if let Some(c) = &known {
            progress(&Progress::UpperBound { k: c.len(), source: "construction".into() });
        }
        for k in floor..=n {
            if let Some(c) = known.as_ref().filter(|c| c.len() == k) {
                res.min_size = Some(k);
                res.witness = Some(c.clone());
                return Ok(());
            }
            let (d, method) = s.decide(k);
            match d.outcome {
                Outcome::Feasible => {
                    res.min_size = Some(k);
                    res.witness = Some(Code::from_mask(n, d.witness.expect("witness")));
                    return Ok(());
                }
                Outcome::Infeasible => res.certificates.push(Certificate { k, method, exhaustive: true, nodes: d.nodes }),
                Outcome::Unknown => {
                    res.complete = false;
                    return Ok(());
                }
            }
        }
        Ok(())
    })?;

    if let Some(w) = &res.witness {
        let report = verify(g, w, cfg.kind)?;
        if !report.ok {
            return Err(Error::failed_check("search witness failed verification", report));
        }
    }
    res.stats = SearchStats { wall_time_ms: start.elapsed().as_millis() as u64, ..s.stats };
    Ok(res)
}

/// A verified closed-form code, used as an upper bound.
fn known_code(g: &CirculantGraph, kind: CodeKind) -> Option<Code> {
    if kind != CodeKind::Identifying || !g.is_c13_proper() || g.n() < 11 {
        return None;
    }
    id_code(g.n()).ok().filter(|c| verify(g, c, kind).is_ok_and(|r| r.ok))
}

/// Meet-in-the-middle decision for size `k`. Falls back to branch and bound
/// when `n < 4·d_max + 4`.
pub fn mitm_decide(g: &CirculantGraph, kind: CodeKind, k: usize) -> Result<SearchResult> {
    decide(g, &SearchConfig::new(kind).method(Method::Mitm), k)
}
