//! Checkable share bounds for both schemes.
//!
//! Identifying codes in `C_n(1,3)`: after shifting, `s̄(c) ≤ 11/4` for a
//! codeword of some `P`/`P′` and `s̄(c) ≤ 65/24` otherwise.
//!
//! Locating-dominating codes in `C_n(1,3)`, `n ≥ 14`: `s(c) ≤ 17/6` or
//! `s(c) ∈ {3, 37/12, 10/3}`, where `3` occurs exactly at `S1`/`S3` owners,
//! `37/12` at `S4` owners and `10/3` at `S6` owners. After shifting,
//! `s̄(c) ≤ 17/6` unless `c` owns an `S3` and `s̄(c) = 3`, and no codeword
//! receives share twice.

use serde::Serialize;

use super::patterns::{detect_patterns, Family, PatternKind};
use super::{share_ledger, Scheme, ShareLedger};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCheck {
    /// Modified share above the identifying bound.
    IdBound,
    /// Base share above 17/6 and outside {3, 37/12, 10/3}.
    Trichotomy,
    /// Exceptional base share not matched by the right owner pattern, or the
    /// other way round.
    PatternCorrespondence,
    PostShiftBound,
    SingleReceipt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub check: LemmaCheck,
    pub codeword: usize,
    pub share: Rational,
    pub modified: Rational,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShareLemmaReport {
    pub family: Family,
    pub n: usize,
    pub codewords: usize,
    pub violations: Vec<LemmaViolation>,
}

impl ShareLemmaReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_share_lemmas(g: &CirculantGraph, c: &Code, family: Family) -> Result<ShareLemmaReport> {
    let violations = match family {
        Family::Id => {
            let ledger = share_ledger(g, c, Scheme::Id)?;
            id_violations(c, &ledger)
        }
        Family::Ld => {
            if g.n() < 14 {
                return Err(Error::precondition(format!("the locating-dominating bounds need n >= 14, got {}", g.n())));
            }
            let ledger = share_ledger(g, c, Scheme::Ld)?;
            ld_violations(c, &ledger)
        }
    };
    Ok(ShareLemmaReport { family, n: c.n(), codewords: c.len(), violations })
}

fn violation(check: LemmaCheck, ledger: &ShareLedger, w: usize, detail: String) -> LemmaViolation {
    LemmaViolation { check, codeword: w, share: ledger.base[&w].clone(), modified: ledger.modified[&w].clone(), detail }
}

fn id_violations(c: &Code, ledger: &ShareLedger) -> Vec<LemmaViolation> {
    let in_p = detect_patterns(c, Family::Id).members_of(c.n(), &PatternKind::ID_FAMILY);
    let (top, reduced) = (Rational::new(11, 4), Rational::new(65, 24));
    c.iter()
        .filter_map(|w| {
            let bound = if in_p.contains(w) { &top } else { &reduced };
            (ledger.modified[&w] > *bound).then(|| {
                violation(LemmaCheck::IdBound, ledger, w, format!("modified share exceeds {bound}"))
            })
        })
        .collect()
}

fn ld_violations(c: &Code, ledger: &ShareLedger) -> Vec<LemmaViolation> {
    let n = c.n();
    let scan = detect_patterns(c, Family::Ld);
    let s1_or_s3 = scan.members_of(n, &[PatternKind::S1, PatternKind::S3]);
    let s3 = scan.members_of(n, &[PatternKind::S3]);
    let s4 = scan.members_of(n, &[PatternKind::S4]);
    let s6 = scan.members_of(n, &[PatternKind::S6]);
    let (cap, three) = (Rational::new(17, 6), Rational::from_integer(3));
    let exceptional = [
        (three.clone(), &s1_or_s3, "S1 or S3"),
        (Rational::new(37, 12), &s4, "S4"),
        (Rational::new(10, 3), &s6, "S6"),
    ];
    let mut out = Vec::new();
    for w in c.iter() {
        let s = &ledger.base[&w];
        if *s > cap && !exceptional.iter().any(|(v, _, _)| v == s) {
            out.push(violation(LemmaCheck::Trichotomy, ledger, w, format!("share {s} is not an exceptional value")));
        }
        for (value, owners, name) in &exceptional {
            if (s == value) != owners.contains(w) {
                let detail = if s == value {
                    format!("share {value} but no {name} pattern is owned")
                } else {
                    format!("owns an {name} pattern but the share is {s}")
                };
                out.push(violation(LemmaCheck::PatternCorrespondence, ledger, w, detail));
            }
        }
        let m = &ledger.modified[&w];
        if *m > cap && !(s3.contains(w) && *m == three) {
            out.push(violation(LemmaCheck::PostShiftBound, ledger, w, format!("modified share {m} exceeds 17/6")));
        }
    }
    for w in ledger.multiple_receivers() {
        out.push(violation(LemmaCheck::SingleReceipt, ledger, w, "receives share from several rules".into()));
    }
    out
}
