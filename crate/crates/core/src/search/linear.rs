//! Left-to-right depth-first enumeration of fixed-size subsets of a linear
//! range, pruned on locally settled window vertices.
//!
//! A window vertex `u` is settled once every position of `[u-d, u+d]` is
//! decided. It must then have a nonempty I-set distinct (as required by the
//! code kind) from the I-sets of the settled window vertices in
//! `[u-2d, u-1]`.

use std::time::Instant;

use super::masks::Masks;
use crate::verify::CodeKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Completed,
    /// The visitor asked to stop.
    Stopped,
    /// Deadline reached or cancelled from outside.
    Aborted,
}

pub(crate) struct Control<'a> {
    pub deadline: Option<Instant>,
    pub cancel: Option<&'a (dyn Fn() -> bool + Sync)>,
    pub nodes: u64,
    pub timed_out: bool,
}

impl<'a> Control<'a> {
    pub fn new(deadline: Option<Instant>) -> Self {
        Control { deadline, cancel: None, nodes: 0, timed_out: false }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0xfff != 0 {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
            return false;
        }
        !self.cancel.is_some_and(|c| c())
    }
}

pub(crate) struct Linear<'m> {
    pub m: &'m Masks,
    pub kind: CodeKind,
    pub lo: usize,
    pub hi: usize,
    /// Inclusive window; empty when `wlo > whi`.
    pub wlo: usize,
    pub whi: usize,
    pub size: usize,
}

impl<'m> Linear<'m> {
    /// Visits every admissible subset in include-first order, i.e. in
    /// increasing lexicographic order of sorted vertex lists. Positions
    /// `lo..lo+prefix.len()` are forced to the given values. `visit`
    /// returns `true` to stop.
    pub fn run(&self, prefix: &[bool], ctl: &mut Control<'_>, visit: &mut dyn FnMut(u128) -> bool) -> Flow {
        if self.hi + 1 - self.lo < self.size {
            return Flow::Completed;
        }
        self.rec(self.lo, 0, 0, prefix, ctl, visit)
    }

    fn rec(
        &self,
        p: usize,
        code: u128,
        chosen: usize,
        prefix: &[bool],
        ctl: &mut Control<'_>,
        visit: &mut dyn FnMut(u128) -> bool,
    ) -> Flow {
        if !ctl.tick() {
            return Flow::Aborted;
        }
        if p > self.hi {
            return if chosen == self.size && visit(code) { Flow::Stopped } else { Flow::Completed };
        }
        let left_after = self.hi - p;
        let forced = prefix.get(p - self.lo).copied();
        for include in [true, false] {
            if forced.is_some_and(|f| f != include) {
                continue;
            }
            let (next, count) = if include { (code | 1 << p, chosen + 1) } else { (code, chosen) };
            if count > self.size || count + left_after < self.size {
                continue;
            }
            if !self.settle_ok(p, next) {
                continue;
            }
            match self.rec(p + 1, next, count, prefix, ctl, visit) {
                Flow::Completed => {}
                other => return other,
            }
        }
        Flow::Completed
    }

    #[inline]
    fn settle_ok(&self, p: usize, code: u128) -> bool {
        let d = self.m.d;
        if p < d {
            return true;
        }
        let u = p - d;
        if u < self.wlo || u > self.whi {
            return true;
        }
        let iu = self.m.iset(u, code);
        if iu == 0 {
            return false;
        }
        if self.kind == CodeKind::Dominating {
            return true;
        }
        let from = self.wlo.max(u.saturating_sub(2 * d));
        (from..u).all(|w| self.m.iset(w, code) != iu || !Masks::must_separate(self.kind, code, u, w))
    }
}
