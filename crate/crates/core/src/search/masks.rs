//! `u128` neighbourhood tables for graphs with at most 128 vertices.

use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::verify::CodeKind;

pub const MAX_N: usize = 128;

#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub n: usize,
    /// Largest generator; every closed neighbourhood lies within this
    /// cyclic distance.
    pub d: usize,
    pub closed: Vec<u128>,
}

impl Masks {
    pub fn new(g: &CirculantGraph) -> Result<Self> {
        if g.n() > MAX_N {
            return Err(Error::Unsupported(format!("search supports n <= {MAX_N}, got {}", g.n())));
        }
        let closed = (0..g.n()).map(|v| g.closed_iter(v).fold(0u128, |m, u| m | 1 << u)).collect();
        Ok(Masks { n: g.n(), d: g.max_generator(), closed })
    }

    #[inline]
    pub fn iset(&self, v: usize, code: u128) -> u128 {
        self.closed[v] & code
    }

    /// Whether `u` and `w` must have distinct I-sets under `kind`.
    #[inline]
    pub fn must_separate(kind: CodeKind, code: u128, u: usize, w: usize) -> bool {
        match kind {
            CodeKind::Dominating => false,
            CodeKind::Identifying => true,
            CodeKind::LocatingDominating => code >> u & 1 == 0 && code >> w & 1 == 0,
        }
    }

    /// Full predicate check. Vertices with equal nonempty I-sets are within
    /// cyclic distance `2d`, so only those pairs are compared.
    pub fn verify(&self, kind: CodeKind, code: u128) -> bool {
        let n = self.n;
        let isets: Vec<u128> = (0..n).map(|v| self.iset(v, code)).collect();
        if isets.contains(&0) {
            return false;
        }
        if kind == CodeKind::Dominating {
            return true;
        }
        let reach = (2 * self.d).min(n - 1);
        for v in 0..n {
            for t in 1..=reach {
                let w = (v + t) % n;
                if isets[v] == isets[w] && Self::must_separate(kind, code, v, w) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn range_mask(lo: usize, hi: usize) -> u128 {
    debug_assert!(lo <= hi && hi < 128);
    let width = hi - lo + 1;
    let ones = if width == 128 { u128::MAX } else { (1u128 << width) - 1 };
    ones << lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Code;
    use crate::verify::verify;

    #[test]
    fn agrees_with_verifier() {
        let g = CirculantGraph::c13(13).unwrap();
        let m = Masks::new(&g).unwrap();
        for mask in (0u128..1 << 13).step_by(7) {
            let c = Code::from_mask(13, mask);
            for kind in [CodeKind::Dominating, CodeKind::Identifying, CodeKind::LocatingDominating] {
                assert_eq!(m.verify(kind, mask), verify(&g, &c, kind).unwrap().ok, "{mask:b} {kind}");
            }
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(range_mask(0, 0), 1);
        assert_eq!(range_mask(2, 4), 0b11100);
        assert_eq!(range_mask(0, 127), u128::MAX);
    }
}
