//! Exact shares and the two shifting schemes.
//!
//! The share of a codeword `c` is `s(c) = Σ_{u ∈ N[c]} 1/|I(u)|`. For a
//! dominating code the shares sum to `n`. A shifting scheme moves share
//! between codewords according to a rule table; the result is the modified
//! share `s̄(c)`.

pub mod lemmas;
pub mod patterns;
pub mod rules;
pub mod window;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::rational::Rational;
use crate::verify::{verify, CodeKind};
use rules::ShiftRule;

pub use lemmas::{check_share_lemmas, LemmaViolation, ShareLemmaReport};
pub use patterns::{detect_patterns, Family, Orientation, PatternKind, PatternOccurrence, PatternScan};
pub use rules::{id_rules, ld_rules, RuleTransfer};
pub use window::{Cell, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Id,
    Ld,
    None,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Id => "id",
            Scheme::Ld => "ld",
            Scheme::None => "none",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(Scheme::Id),
            "ld" => Ok(Scheme::Ld),
            "none" => Ok(Scheme::None),
            _ => Err(Error::Parse(format!("unknown scheme {s:?} (expected id, ld or none)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: String,
    pub from: usize,
    pub to: usize,
    pub amount: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShareLedger {
    pub n: usize,
    pub scheme: Scheme,
    pub base: BTreeMap<usize, Rational>,
    pub transfers: Vec<Transfer>,
    pub modified: BTreeMap<usize, Rational>,
}

impl ShareLedger {
    pub fn base_total(&self) -> Rational {
        self.base.values().sum()
    }

    pub fn modified_total(&self) -> Rational {
        self.modified.values().sum()
    }

    pub fn outgoing(&self, c: usize) -> Rational {
        self.transfers.iter().filter(|t| t.from == c).map(|t| &t.amount).sum()
    }

    pub fn incoming(&self, c: usize) -> Rational {
        self.transfers.iter().filter(|t| t.to == c).map(|t| &t.amount).sum()
    }

    /// `modified(c) = base(c) − out(c) + in(c)` for every codeword, and the
    /// totals agree.
    pub fn is_consistent(&self) -> bool {
        self.base.iter().all(|(&c, b)| {
            self.modified.get(&c) == Some(&(b - &self.outgoing(c) + &self.incoming(c)))
        }) && self.base_total() == self.modified_total()
    }

    /// Codewords named as the destination of more than one transfer.
    pub fn multiple_receivers(&self) -> Vec<usize> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &self.transfers {
            *counts.entry(t.to).or_default() += 1;
        }
        counts.into_iter().filter(|&(_, k)| k > 1).map(|(c, _)| c).collect()
    }
}

fn coverage(g: &CirculantGraph, c: &Code) -> Vec<usize> {
    (0..g.n()).map(|v| g.closed_iter(v).filter(|&u| c.contains(u)).count()).collect()
}

fn share_from_coverage(g: &CirculantGraph, cover: &[usize], w: usize) -> Result<Rational> {
    let mut s = Rational::zero();
    for u in g.closed_iter(w) {
        match cover[u] {
            0 => return Err(Error::UndefinedShare { codeword: w, vertex: u }),
            k => s += &Rational::unit_fraction(k),
        }
    }
    Ok(s)
}

fn check_dims(g: &CirculantGraph, c: &Code) -> Result<()> {
    if g.n() != c.n() {
        return Err(Error::DimensionMismatch { graph: g.n(), code: c.n() });
    }
    Ok(())
}

/// `s(c)` of the codeword `w`.
pub fn share(g: &CirculantGraph, c: &Code, w: usize) -> Result<Rational> {
    check_dims(g, c)?;
    g.check_vertex(w)?;
    if !c.contains(w) {
        return Err(Error::NotACodeword(w));
    }
    let mut s = Rational::zero();
    for u in g.closed_iter(w) {
        let k = g.closed_iter(u).filter(|&x| c.contains(x)).count();
        if k == 0 {
            return Err(Error::UndefinedShare { codeword: w, vertex: u });
        }
        s += &Rational::unit_fraction(k);
    }
    Ok(s)
}

/// Base shares of every codeword, then all rule applications of `scheme`.
pub fn share_ledger(g: &CirculantGraph, c: &Code, scheme: Scheme) -> Result<ShareLedger> {
    check_dims(g, c)?;
    let kind = match scheme {
        Scheme::None => CodeKind::Dominating,
        Scheme::Id => CodeKind::Identifying,
        Scheme::Ld => CodeKind::LocatingDominating,
    };
    let report = verify(g, c, kind)?;
    if !report.ok {
        return Err(Error::failed_check(format!("the code is not {kind}"), report));
    }
    if scheme != Scheme::None && !g.is_c13_proper() {
        return Err(Error::precondition(format!("the {scheme} scheme is defined on C_n(1,3) with n >= 7, not on {g}")));
    }
    let rules = match scheme {
        Scheme::Id => id_rules(),
        Scheme::Ld => ld_rules(),
        Scheme::None => Vec::new(),
    };
    ledger_with_rules(g, c, scheme, &rules)
}

/// Ledger for a dominating `c` under an arbitrary rule table.
pub(crate) fn ledger_with_rules(
    g: &CirculantGraph,
    c: &Code,
    scheme: Scheme,
    rules: &[ShiftRule],
) -> Result<ShareLedger> {
    let cover = coverage(g, c);
    let mut base = BTreeMap::new();
    for w in c.iter() {
        base.insert(w, share_from_coverage(g, &cover, w)?);
    }
    let transfers = apply_rules(c, rules);
    let mut modified = base.clone();
    for t in &transfers {
        *modified.get_mut(&t.from).expect("source is a codeword") -= &t.amount;
        *modified.get_mut(&t.to).expect("destination is a codeword") += &t.amount;
    }
    Ok(ShareLedger { n: c.n(), scheme, base, transfers, modified })
}

/// All transfers triggered by `rules` on `c`, ordered by codeword, then by
/// rule table order. A window longer than `n` wraps onto itself and fires
/// only where the aliased cells agree.
fn apply_rules(c: &Code, rules: &[ShiftRule]) -> Vec<Transfer> {
    let n = c.n();
    let mut out = Vec::new();
    for v in c.iter() {
        for r in rules {
            if !r.matches_at(c, v) {
                continue;
            }
            for t in &r.transfers {
                let from = (v as isize + t.from).rem_euclid(n as isize) as usize;
                let to = (v as isize + t.to).rem_euclid(n as isize) as usize;
                debug_assert!(c.contains(from) && c.contains(to), "rule {} moves share off the code", t.id);
                out.push(Transfer { rule: t.id.clone(), from, to, amount: t.amount.clone() });
            }
        }
    }
    out
}
