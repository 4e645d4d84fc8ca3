//! Declarative shifting rules.
//!
//! A rule is a window anchored at a codeword `c`, an optional disjunctive
//! side condition (at least one of the listed offsets is a codeword), and a
//! list of transfers between offsets relative to `c`.

use super::patterns::PatternKind;
use super::window::Window;
use crate::code::Code;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleTransfer {
    pub id: String,
    pub from: isize,
    pub to: isize,
    pub amount: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRule {
    pub id: String,
    pub window: Window,
    /// Window index of the codeword `c`.
    pub origin: usize,
    pub any_of: Vec<isize>,
    pub transfers: Vec<RuleTransfer>,
}

const PRIME: char = '′';

fn mirror_id(id: &str) -> String {
    match id.strip_suffix(PRIME) {
        Some(base) => base.to_string(),
        None => format!("{id}{PRIME}"),
    }
}

impl ShiftRule {
    fn build(id: &str, window: &str, origin: usize, any_of: &[isize], transfers: &[(&str, isize, isize, i64, i64)]) -> Self {
        let window = Window::parse(window).expect("static rule window");
        assert!(origin < window.len());
        ShiftRule {
            id: id.to_string(),
            window,
            origin,
            any_of: any_of.to_vec(),
            transfers: transfers
                .iter()
                .map(|&(tid, from, to, num, den)| RuleTransfer {
                    id: tid.to_string(),
                    from,
                    to,
                    amount: Rational::new(num, den),
                })
                .collect(),
        }
    }

    /// Reflection across `c`.
    pub fn mirrored(&self) -> ShiftRule {
        ShiftRule {
            id: mirror_id(&self.id),
            window: self.window.reversed(),
            origin: self.window.len() - 1 - self.origin,
            any_of: self.any_of.iter().map(|o| -o).collect(),
            transfers: self
                .transfers
                .iter()
                .map(|t| RuleTransfer { id: mirror_id(&t.id), from: -t.from, to: -t.to, amount: t.amount.clone() })
                .collect(),
        }
    }

    /// Whether the rule fires with `c` at vertex `v`.
    pub fn matches_at(&self, code: &Code, v: usize) -> bool {
        let n = code.n() as isize;
        let at = |off: isize| (v as isize + off).rem_euclid(n) as usize;
        let anchor = at(-(self.origin as isize));
        self.window.matches(code, anchor) && (self.any_of.is_empty() || self.any_of.iter().any(|&o| code.contains(at(o))))
    }
}

fn with_mirrors(rules: Vec<ShiftRule>) -> Vec<ShiftRule> {
    let mut out = Vec::with_capacity(rules.len() * 2);
    for r in rules {
        let m = r.mirrored();
        out.push(r);
        out.push(m);
    }
    out
}

/// Rules of the identifying scheme, each followed by its mirror image.
pub fn id_rules() -> Vec<ShiftRule> {
    with_mirrors(vec![
        ShiftRule::build("R1", "oooxxxo*o*", 4, &[3, 5], &[("R1.1", 0, 1, 1, 12), ("R1.2", 0, -1, 1, 24)]),
        ShiftRule::build("R2", "x*oooxxooxo***", 5, &[6, 8], &[("R2.1", 0, 4, 3, 24), ("R2.2", 1, 4, 3, 24)]),
        ShiftRule::build(
            "R3",
            "x*oooxxooxooxo",
            5,
            &[],
            &[("R3.1", 0, 1, 1, 24), ("R3.2", 0, 4, 1, 24), ("R3.3", 0, 7, 1, 24)],
        ),
        ShiftRule::build(
            "R4",
            "xxooxooooxxx",
            0,
            &[],
            &[("R4.1", 0, 11, 3, 24), ("R4.2", 1, 11, 3, 24), ("R4.3", 4, 11, 3, 24)],
        ),
        ShiftRule::build("R5", "o*ooxxoxo*o*", 4, &[5, 7], &[("R5", 0, 3, 3, 24)]),
        ShiftRule::build("R6", "xooooxxooxx", 5, &[], &[("R6", 0, 1, 3, 24)]),
        ShiftRule::build("R7", "oooooxxoo", 5, &[], &[("R7", 0, 1, 1, 12)]),
    ])
}

/// Rules of the locating-dominating scheme: each fires at the owner of an
/// S-pattern occurrence.
pub fn ld_rules() -> Vec<ShiftRule> {
    let owner_rule = |id: &str, kind: PatternKind, to: isize, num: i64, den: i64| {
        ShiftRule::build(id, kind.window_str(), kind.owner_offset().unwrap(), &[], &[(id, 0, to, num, den)])
    };
    with_mirrors(vec![
        owner_rule("LD-R1", PatternKind::S1, -5, 5, 12),
        owner_rule("LD-R2", PatternKind::S6, 4, 7, 12),
        owner_rule("LD-R3", PatternKind::S4, 2, 1, 3),
    ])
}
