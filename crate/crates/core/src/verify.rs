//! Domination, identification and location-domination checks with
//! re-checkable failure witnesses.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeKind {
    Dominating,
    Identifying,
    LocatingDominating,
}

impl CodeKind {
    pub fn short(self) -> &'static str {
        match self {
            CodeKind::Dominating => "dom",
            CodeKind::Identifying => "id",
            CodeKind::LocatingDominating => "ld",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Dominating => "dominating",
            CodeKind::Identifying => "identifying",
            CodeKind::LocatingDominating => "locating-dominating",
        })
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dom" | "dominating" => Ok(CodeKind::Dominating),
            "id" | "identifying" => Ok(CodeKind::Identifying),
            "ld" | "locating-dominating" => Ok(CodeKind::LocatingDominating),
            _ => Err(Error::Parse(format!("unknown code kind {s:?} (expected dom, id or ld)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// A vertex with empty I-set.
    Uncovered { vertex: usize },
    /// Two distinct vertices `u < v` with the same I-set.
    Pair { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub kind: CodeKind,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerifyReport {
    fn from_witness(kind: CodeKind, witness: Option<Witness>) -> Self {
        VerifyReport { kind, ok: witness.is_none(), witness }
    }
}

fn check_dims(g: &CirculantGraph, c: &Code) -> Result<()> {
    if g.n() != c.n() {
        return Err(Error::DimensionMismatch { graph: g.n(), code: c.n() });
    }
    Ok(())
}

/// `I(C; v) = N[v] ∩ C`.
pub fn ident_set(g: &CirculantGraph, c: &Code, v: usize) -> Result<VertexSet> {
    check_dims(g, c)?;
    g.check_vertex(v)?;
    VertexSet::from_vertices(g.n(), g.closed_iter(v).filter(|&u| c.contains(u)))
}

/// The I-set of `v` as a sorted vertex list; the canonical hashing key.
pub(crate) fn ident_key(g: &CirculantGraph, c: &Code, v: usize) -> Vec<usize> {
    let mut key: Vec<usize> = g.closed_iter(v).filter(|&u| c.contains(u)).collect();
    key.sort_unstable();
    key
}

pub fn is_dominating(g: &CirculantGraph, c: &Code) -> Result<VerifyReport> {
    check_dims(g, c)?;
    Ok(VerifyReport::from_witness(CodeKind::Dominating, first_uncovered(g, c)))
}

pub fn is_identifying(g: &CirculantGraph, c: &Code) -> Result<VerifyReport> {
    verify(g, c, CodeKind::Identifying)
}

pub fn is_locating_dominating(g: &CirculantGraph, c: &Code) -> Result<VerifyReport> {
    verify(g, c, CodeKind::LocatingDominating)
}

/// Runs the predicate for `kind`. The witness is the least uncovered vertex
/// if any, otherwise the lexicographically least violating pair `(u, v)`.
pub fn verify(g: &CirculantGraph, c: &Code, kind: CodeKind) -> Result<VerifyReport> {
    check_dims(g, c)?;
    if let Some(vertex) = first_uncovered(g, c) {
        return Ok(VerifyReport::from_witness(kind, Some(vertex)));
    }
    let witness = match kind {
        CodeKind::Dominating => None,
        CodeKind::Identifying => least_twin_pair(g, c, |_| true),
        CodeKind::LocatingDominating => least_twin_pair(g, c, |v| !c.contains(v)),
    };
    Ok(VerifyReport::from_witness(kind, witness))
}

fn first_uncovered(g: &CirculantGraph, c: &Code) -> Option<Witness> {
    (0..g.n())
        .find(|&v| !g.closed_iter(v).any(|u| c.contains(u)))
        .map(|vertex| Witness::Uncovered { vertex })
}

/// Groups the vertices admitted by `domain` by I-set and returns the least
/// `(first, second)` pair over all groups of size at least two.
fn least_twin_pair(g: &CirculantGraph, c: &Code, domain: impl Fn(usize) -> bool) -> Option<Witness> {
    let mut groups: HashMap<Vec<usize>, (usize, Option<usize>)> = HashMap::new();
    for v in (0..g.n()).filter(|&v| domain(v)) {
        groups
            .entry(ident_key(g, c, v))
            .and_modify(|(_, second)| {
                second.get_or_insert(v);
            })
            .or_insert((v, None));
    }
    groups
        .into_values()
        .filter_map(|(u, second)| second.map(|v| (u, v)))
        .min()
        .map(|(u, v)| Witness::Pair { u, v })
}

/// Checks that `witness` really violates `kind` for `c`.
pub fn witness_is_sound(g: &CirculantGraph, c: &Code, kind: CodeKind, witness: &Witness) -> bool {
    match *witness {
        Witness::Uncovered { vertex } => {
            vertex < g.n() && ident_set(g, c, vertex).map(|s| s.is_empty()).unwrap_or(false)
        }
        Witness::Pair { u, v } => {
            let in_domain = match kind {
                CodeKind::Dominating => false,
                CodeKind::Identifying => true,
                CodeKind::LocatingDominating => !c.contains(u) && !c.contains(v),
            };
            in_domain && u < v && v < g.n() && ident_key(g, c, u) == ident_key(g, c, v)
        }
    }
}
