//! Locally valid half-codes.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;

use super::linear::{Control, Flow, Linear};
use super::masks::Masks;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::verify::CodeKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfCount {
    pub range: [usize; 2],
    pub window: [usize; 2],
    pub size: usize,
    pub count: u64,
}

#[derive(Clone, Debug)]
pub struct HalfEnumeration {
    pub count: u64,
    pub codes: Vec<Code>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct HalfSpec {
    pub lo: usize,
    pub hi: usize,
    pub wlo: usize,
    pub whi: usize,
    pub size: usize,
}

impl HalfSpec {
    pub fn count_record(&self, count: u64) -> HalfCount {
        HalfCount { range: [self.lo, self.hi], window: [self.wlo, self.whi], size: self.size, count }
    }
}

fn spec(
    g: &CirculantGraph,
    range: &RangeInclusive<usize>,
    size: usize,
    window: &RangeInclusive<usize>,
) -> Result<HalfSpec> {
    let (lo, hi, wlo, whi) = (*range.start(), *range.end(), *window.start(), *window.end());
    let d = g.max_generator();
    let bad = |why: &str| Err(Error::precondition(format!("half range {lo}..={hi} with window {wlo}..={whi}: {why}")));
    if lo > hi || hi >= g.n() {
        return bad("range must be a nonempty interval of vertices");
    }
    if wlo > whi {
        return bad("window must be nonempty");
    }
    if wlo < lo + d || whi + d > hi {
        return bad("window must stay the generator radius away from the range ends");
    }
    if size > hi - lo + 1 {
        return bad("size exceeds the range");
    }
    Ok(HalfSpec { lo, hi, wlo, whi, size })
}

/// Streams the masks of all locally valid half-codes. Returns `None` if the
/// deadline passed before the enumeration finished.
pub(crate) fn stream(
    m: &Masks,
    kind: CodeKind,
    s: HalfSpec,
    deadline: Option<Instant>,
    nodes: &mut u64,
    mut f: impl FnMut(u128),
) -> Option<u64> {
    let lin = Linear { m, kind, lo: s.lo, hi: s.hi, wlo: s.wlo, whi: s.whi, size: s.size };
    let mut ctl = Control::new(deadline);
    let mut count = 0u64;
    let flow = lin.run(&[], &mut ctl, &mut |code| {
        count += 1;
        f(code);
        false
    });
    *nodes += ctl.nodes;
    (flow == Flow::Completed).then_some(count)
}

/// All subsets `S` of `range` with `|S| = size` such that every window vertex
/// has a nonempty I-set with respect to `S`, and window I-sets are pairwise
/// distinct (identifying) or distinct over window non-codewords
/// (locating-dominating). The window must lie the largest generator away
/// from both ends of the range.
pub fn enumerate_half(
    g: &CirculantGraph,
    kind: CodeKind,
    range: RangeInclusive<usize>,
    size: usize,
    window: RangeInclusive<usize>,
) -> Result<HalfEnumeration> {
    let mut codes = Vec::new();
    let count = for_each_half(g, kind, range, size, window, |c| codes.push(c))?;
    Ok(HalfEnumeration { count, codes })
}

/// Streaming form of [`enumerate_half`]; returns the count.
pub fn for_each_half(
    g: &CirculantGraph,
    kind: CodeKind,
    range: RangeInclusive<usize>,
    size: usize,
    window: RangeInclusive<usize>,
    mut f: impl FnMut(Code),
) -> Result<u64> {
    let s = spec(g, &range, size, &window)?;
    let m = Masks::new(g)?;
    let mut nodes = 0;
    let n = g.n();
    Ok(stream(&m, kind, s, None, &mut nodes, |mask| f(Code::from_mask(n, mask))).expect("no deadline"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct filter over all subsets of the range.
    fn brute(g: &CirculantGraph, kind: CodeKind, lo: usize, hi: usize, size: usize, wlo: usize, whi: usize) -> u64 {
        let width = hi - lo + 1;
        let mut count = 0;
        for bits in 0u64..1 << width {
            if bits.count_ones() as usize != size {
                continue;
            }
            let code = Code::from_mask(g.n(), (bits as u128) << lo);
            let isets: Vec<Vec<usize>> = (wlo..=whi)
                .map(|w| g.closed_iter(w).filter(|&u| code.contains(u)).collect::<std::collections::BTreeSet<_>>().into_iter().collect())
                .collect();
            if isets.iter().any(|s| s.is_empty()) {
                continue;
            }
            let mut ok = true;
            for i in 0..isets.len() {
                for j in i + 1..isets.len() {
                    let both_free = !code.contains(wlo + i) && !code.contains(wlo + j);
                    let relevant = kind == CodeKind::Identifying || both_free;
                    if relevant && isets[i] == isets[j] {
                        ok = false;
                    }
                }
            }
            count += ok as u64;
        }
        count
    }

    #[test]
    fn matches_brute_force() {
        let g = CirculantGraph::c13(30).unwrap();
        for kind in [CodeKind::Identifying, CodeKind::LocatingDominating] {
            for size in 3..8 {
                let fast = enumerate_half(&g, kind, 2..=16, size, 5..=13).unwrap();
                assert_eq!(fast.count, brute(&g, kind, 2, 16, size, 5, 13), "{kind} {size}");
                assert_eq!(fast.codes.len() as u64, fast.count);
            }
        }
    }

    #[test]
    fn empty_half_covers_nothing() {
        let g = CirculantGraph::c13(46).unwrap();
        assert_eq!(enumerate_half(&g, CodeKind::Identifying, 0..=22, 0, 3..=19).unwrap().count, 0);
    }

    #[test]
    fn malformed_ranges() {
        let g = CirculantGraph::c13(46).unwrap();
        assert!(enumerate_half(&g, CodeKind::Identifying, 0..=22, 8, 2..=19).is_err());
        assert!(enumerate_half(&g, CodeKind::Identifying, 0..=46, 8, 3..=19).is_err());
        assert!(enumerate_half(&g, CodeKind::Identifying, 0..=22, 30, 3..=19).is_err());
    }
}
