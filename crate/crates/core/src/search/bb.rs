//! Branch and bound over `Z_n`, left to right, sharded by prefix.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::linear::{Control, Flow, Linear};
use super::masks::Masks;
use super::{Decision, Outcome};
use crate::verify::CodeKind;

/// Decides whether a code of exactly `k` codewords exists. With `fix_zero`
/// only codes containing vertex 0 are explored; every nonempty code has such
/// a rotation, so feasibility is unchanged.
pub(crate) fn decide(m: &Masks, kind: CodeKind, k: usize, fix_zero: bool, deadline: Option<Instant>) -> Decision {
    let n = m.n;
    if k == 0 || k > n {
        return Decision { outcome: Outcome::Infeasible, witness: None, nodes: 0 };
    }
    let d = m.d;
    // Window vertices have their whole neighbourhood inside [0, n-1];
    // the others are checked by the full verifier at the leaves.
    let (wlo, whi) = if n > 2 * d { (d, n - 1 - d) } else { (1, 0) };
    let lin = Linear { m, kind, lo: 0, hi: n - 1, wlo, whi, size: k };
    let prefixes = shard_prefixes(n, k, fix_zero);
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<(Option<u128>, u64, bool)> = prefixes
        .par_iter()
        .enumerate()
        .map(|(i, prefix)| {
            if best.load(Ordering::Relaxed) < i {
                return (None, 0, false);
            }
            let cancel = || best.load(Ordering::Relaxed) < i;
            let mut ctl = Control::new(deadline);
            ctl.cancel = Some(&cancel);
            let mut found = None;
            let flow = lin.run(prefix, &mut ctl, &mut |code| {
                if m.verify(kind, code) {
                    found = Some(code);
                    true
                } else {
                    false
                }
            });
            if found.is_some() {
                best.fetch_min(i, Ordering::Relaxed);
            }
            (found, ctl.nodes, flow == Flow::Aborted && ctl.timed_out)
        })
        .collect();
    let nodes = results.iter().map(|r| r.1).sum();
    let first_hit = results.iter().position(|r| r.0.is_some());
    let limit = first_hit.unwrap_or(results.len());
    if results[..limit].iter().any(|r| r.2) {
        return Decision { outcome: Outcome::Unknown, witness: None, nodes };
    }
    match first_hit {
        Some(i) => Decision { outcome: Outcome::Feasible, witness: results[i].0, nodes },
        None => Decision { outcome: Outcome::Infeasible, witness: None, nodes },
    }
}

/// Assignments of the first few positions, in include-first order.
fn shard_prefixes(n: usize, k: usize, fix_zero: bool) -> Vec<Vec<bool>> {
    let depth = n.min(12).saturating_sub(2).max(1);
    let mut out: Vec<Vec<bool>> = vec![Vec::new()];
    for p in 0..depth {
        let mut next = Vec::with_capacity(out.len() * 2);
        for pre in out {
            for include in [true, false] {
                if p == 0 && fix_zero && !include {
                    continue;
                }
                let ones = pre.iter().filter(|&&b| b).count() + include as usize;
                if ones > k || ones + (n - p - 1) < k {
                    continue;
                }
                let mut v = pre.clone();
                v.push(include);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantGraph;

    #[test]
    fn prefixes_are_ordered() {
        let p = shard_prefixes(12, 4, true);
        assert!(p.iter().all(|v| v[0]));
        assert!(p.windows(2).all(|w| {
            // include-first order is reverse lexicographic on bool vectors
            w[0] > w[1]
        }));
    }

    #[test]
    fn small_cases() {
        let m = Masks::new(&CirculantGraph::c13(13).unwrap()).unwrap();
        let d = decide(&m, CodeKind::Identifying, 5, true, None);
        assert_eq!(d.outcome, Outcome::Feasible);
        assert!(m.verify(CodeKind::Identifying, d.witness.unwrap()));
        assert_eq!(decide(&m, CodeKind::Identifying, 4, true, None).outcome, Outcome::Infeasible);
    }
}
