//! Meet in the middle: split `Z_n` into `L = [0, h-1]` and `R = [h, n-1]`,
//! enumerate locally valid half-codes for every size split, and join them
//! through the code bits near the two cuts.
//!
//! Vertices of the windows `[d, h-1-d]` and `[h+d, n-1-d]` see only their own
//! half. The remaining boundary vertices see the bits within `d` of a cut,
//! so their I-sets depend only on the two signatures. For a fixed pair of
//! signatures the remaining conditions split into a condition on the left
//! half-code alone (no window I-set of `L` equals a boundary I-set lying in
//! `L`) and the mirror condition on the right half-code.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use super::half::{stream, HalfCount, HalfSpec};
use super::masks::{range_mask, Masks};
use super::{Decision, Outcome};
use crate::verify::CodeKind;

pub(crate) struct MitmRun {
    pub decision: Decision,
    pub half_counts: Vec<HalfCount>,
}

pub(crate) fn applicable(m: &Masks) -> bool {
    m.n >= 4 * m.d + 4
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    Left,
    Right,
}

struct Layout {
    left: HalfSpec,
    right: HalfSpec,
    left_mask: u128,
    right_mask: u128,
    boundary: Vec<usize>,
    sig_mask: u128,
}

impl Layout {
    fn new(m: &Masks) -> Self {
        let (n, d, h) = (m.n, m.d, m.n / 2);
        let left = HalfSpec { lo: 0, hi: h - 1, wlo: d, whi: h - 1 - d, size: 0 };
        let right = HalfSpec { lo: h, hi: n - 1, wlo: h + d, whi: n - 1 - d, size: 0 };
        let in_window = |v: usize| (left.wlo..=left.whi).contains(&v) || (right.wlo..=right.whi).contains(&v);
        let boundary: Vec<usize> = (0..n).filter(|&v| !in_window(v)).collect();
        let sig_mask = boundary.iter().fold(0u128, |acc, &b| acc | m.closed[b]);
        Layout {
            left,
            right,
            left_mask: range_mask(0, h - 1),
            right_mask: range_mask(h, n - 1),
            boundary,
            sig_mask,
        }
    }

    fn spec(&self, side: Side, size: usize) -> HalfSpec {
        let base = match side {
            Side::Left => self.left,
            Side::Right => self.right,
        };
        HalfSpec { size, ..base }
    }

    fn width(&self, side: Side) -> usize {
        let s = self.spec(side, 0);
        s.hi - s.lo + 1
    }
}

type Buckets = Vec<(u128, Vec<u128>)>;

struct Enumerated {
    buckets: Buckets,
    count: u64,
}

/// Decides whether a code of exactly `k` codewords exists. Requires
/// [`applicable`].
pub(crate) fn decide(
    m: &Masks,
    kind: CodeKind,
    k: usize,
    deadline: Option<Instant>,
    on_half: &(dyn Fn(&HalfCount) + Sync),
) -> MitmRun {
    assert!(applicable(m));
    let lay = Layout::new(m);
    let mut cache: HashMap<(Side, usize), Option<Enumerated>> = HashMap::new();
    let mut half_counts = Vec::new();
    let mut nodes = 0u64;
    let unknown = |half_counts, nodes| MitmRun { decision: Decision { outcome: Outcome::Unknown, witness: None, nodes }, half_counts };

    for s1 in 0..=k {
        let s2 = k - s1;
        if s1 > lay.width(Side::Left) || s2 > lay.width(Side::Right) {
            continue;
        }
        let order = if s1 <= s2 { [(Side::Left, s1), (Side::Right, s2)] } else { [(Side::Right, s2), (Side::Left, s1)] };
        let mut empty = false;
        for key in order {
            if let Entry::Vacant(slot) = cache.entry(key) {
                let spec = lay.spec(key.0, key.1);
                let mut by_sig: BTreeMap<u128, Vec<u128>> = BTreeMap::new();
                match stream(m, kind, spec, deadline, &mut nodes, |c| by_sig.entry(c & lay.sig_mask).or_default().push(c)) {
                    Some(count) => {
                        let rec = spec.count_record(count);
                        on_half(&rec);
                        half_counts.push(rec);
                        slot.insert(Some(Enumerated { buckets: by_sig.into_iter().collect(), count }));
                    }
                    None => return unknown(half_counts, nodes),
                }
            }
            if cache[&key].as_ref().is_none_or(|e| e.count == 0) {
                empty = true;
                break;
            }
        }
        if empty {
            continue;
        }
        let a = cache[&(Side::Left, s1)].as_ref().unwrap();
        let b = cache[&(Side::Right, s2)].as_ref().unwrap();
        match join(m, kind, &lay, &a.buckets, &b.buckets, deadline) {
            Join::Found(w) => {
                debug_assert!(m.verify(kind, w));
                return MitmRun { decision: Decision { outcome: Outcome::Feasible, witness: Some(w), nodes }, half_counts };
            }
            Join::None => {}
            Join::TimedOut => return unknown(half_counts, nodes),
        }
    }
    MitmRun { decision: Decision { outcome: Outcome::Infeasible, witness: None, nodes }, half_counts }
}

enum Join {
    Found(u128),
    None,
    TimedOut,
}

fn join(m: &Masks, kind: CodeKind, lay: &Layout, a: &Buckets, b: &Buckets, deadline: Option<Instant>) -> Join {
    let hit = a.par_iter().map(|(sa, codes_a)| {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(());
        }
        for (sb, codes_b) in b {
            let sig = sa | sb;
            let Some((left_only, right_only)) = boundary_isets(m, kind, lay, sig) else { continue };
            let Some(&ca) = codes_a.iter().find(|&&c| avoids(m, kind, lay.left, c, &left_only)) else { continue };
            let Some(&cb) = codes_b.iter().find(|&&c| avoids(m, kind, lay.right, c, &right_only)) else { continue };
            return Ok(Some(ca | cb));
        }
        Ok(None)
    });
    match hit.find_map_first(|r| match r {
        Ok(None) => None,
        other => Some(other),
    }) {
        Some(Ok(Some(w))) => Join::Found(w),
        Some(Err(())) => Join::TimedOut,
        _ => Join::None,
    }
}

/// Checks the boundary vertices under the combined signature and returns the
/// boundary I-sets that lie entirely in `L` and in `R` (only those that must
/// differ from window I-sets).
fn boundary_isets(m: &Masks, kind: CodeKind, lay: &Layout, sig: u128) -> Option<(Vec<u128>, Vec<u128>)> {
    let isets: Vec<u128> = lay.boundary.iter().map(|&v| m.iset(v, sig)).collect();
    if isets.contains(&0) {
        return None;
    }
    if kind == CodeKind::Dominating {
        return Some((Vec::new(), Vec::new()));
    }
    for i in 0..isets.len() {
        for j in i + 1..isets.len() {
            if isets[i] == isets[j] && Masks::must_separate(kind, sig, lay.boundary[i], lay.boundary[j]) {
                return None;
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (&v, &s) in lay.boundary.iter().zip(&isets) {
        if kind == CodeKind::LocatingDominating && sig >> v & 1 == 1 {
            continue;
        }
        if s & !lay.left_mask == 0 {
            left.push(s);
        } else if s & !lay.right_mask == 0 {
            right.push(s);
        }
    }
    Some((left, right))
}

fn avoids(m: &Masks, kind: CodeKind, half: HalfSpec, code: u128, boundary: &[u128]) -> bool {
    boundary.is_empty()
        || (half.wlo..=half.whi).all(|w| {
            (kind == CodeKind::LocatingDominating && code >> w & 1 == 1) || !boundary.contains(&m.iset(w, code))
        })
}
