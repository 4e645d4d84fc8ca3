//! Codeword patterns that characterize the extremal share configurations.
//!
//! Identifying family: `P = ooxxooooo` and its mirror image `P′ = oooooxxoo`;
//! the two `x` cells are the codewords that belong to the pattern.
//!
//! Locating-dominating family: `S1`, `S3`, `S4`, `S6` with one designated
//! owner codeword each, scanned in both orientations, and the block `P6`.

use serde::{Serialize, Serializer};

use super::window::Window;
use crate::code::Code;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    P,
    PPrime,
    S1,
    S3,
    S4,
    S6,
    P6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Id,
    Ld,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Normal,
    Mirrored,
}

impl PatternKind {
    pub const ID_FAMILY: [PatternKind; 2] = [PatternKind::P, PatternKind::PPrime];
    pub const LD_FAMILY: [PatternKind; 5] =
        [PatternKind::S1, PatternKind::S3, PatternKind::S4, PatternKind::S6, PatternKind::P6];

    pub fn family(self) -> Family {
        match self {
            PatternKind::P | PatternKind::PPrime => Family::Id,
            _ => Family::Ld,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::P => "P",
            PatternKind::PPrime => "P′",
            PatternKind::S1 => "S1",
            PatternKind::S3 => "S3",
            PatternKind::S4 => "S4",
            PatternKind::S6 => "S6",
            PatternKind::P6 => "P6",
        }
    }

    /// Window in normal orientation.
    pub fn window_str(self) -> &'static str {
        match self {
            PatternKind::P => "ooxxooooo",
            PatternKind::PPrime => "oooooxxoo",
            PatternKind::S1 => "xxxoooxxoooo*x",
            PatternKind::S3 => "xxooooxxooooxx",
            PatternKind::S4 => "oxooooxoxox*x",
            PatternKind::S6 => "xxxooooxoooxxx",
            PatternKind::P6 => "xxoooo",
        }
    }

    pub fn window(self) -> Window {
        Window::parse(self.window_str()).expect("static pattern")
    }

    /// Window offset of the owner codeword (normal orientation), for the
    /// S-patterns.
    pub fn owner_offset(self) -> Option<usize> {
        match self {
            PatternKind::S1 | PatternKind::S3 | PatternKind::S6 => Some(7),
            PatternKind::S4 => Some(6),
            _ => None,
        }
    }

    /// Orientations scanned. The mirror image of `P` is `P′` (and vice
    /// versa), so those two are scanned in normal orientation only.
    pub fn orientations(self) -> &'static [Orientation] {
        match self {
            PatternKind::P | PatternKind::PPrime => &[Orientation::Normal],
            _ => &[Orientation::Normal, Orientation::Mirrored],
        }
    }

    /// The (pattern, orientation) that an occurrence turns into under the
    /// reflection `v ↦ -v`.
    pub fn reflected(self, o: Orientation) -> (PatternKind, Orientation) {
        match (self, o) {
            (PatternKind::P, o) => (PatternKind::PPrime, o),
            (PatternKind::PPrime, o) => (PatternKind::P, o),
            (k, Orientation::Normal) => (k, Orientation::Mirrored),
            (k, Orientation::Mirrored) => (k, Orientation::Normal),
        }
    }

    pub fn oriented_window(self, o: Orientation) -> Window {
        match o {
            Orientation::Normal => self.window(),
            Orientation::Mirrored => self.window().reversed(),
        }
    }
}

impl Serialize for PatternKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternOccurrence {
    pub pattern: PatternKind,
    /// Vertex under the leftmost window cell.
    pub anchor: usize,
    pub orientation: Orientation,
    /// The underlined codeword of an S-pattern.
    pub owner: Option<usize>,
    /// Codewords belonging to the occurrence: the owner for S-patterns,
    /// both `x` cells for `P`, `P′` and `P6`.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PatternScan {
    pub occurrences: Vec<PatternOccurrence>,
    /// Patterns whose window is longer than n; they are not matched.
    pub unscannable: Vec<PatternKind>,
}

impl PatternScan {
    pub fn of(&self, kind: PatternKind) -> impl Iterator<Item = &PatternOccurrence> {
        self.occurrences.iter().filter(move |o| o.pattern == kind)
    }

    /// Codewords that belong to some occurrence of one of `kinds`.
    pub fn members_of(&self, n: usize, kinds: &[PatternKind]) -> VertexSet {
        let mut s = VertexSet::new(n);
        for o in self.occurrences.iter().filter(|o| kinds.contains(&o.pattern)) {
            for &m in &o.members {
                s.insert(m);
            }
        }
        s
    }
}

/// All cyclic occurrences of one pattern, ordered by anchor then orientation.
pub fn scan_pattern(c: &Code, kind: PatternKind) -> Option<Vec<PatternOccurrence>> {
    let n = c.n();
    let base = kind.window();
    if base.len() > n {
        return None;
    }
    let mut out = Vec::new();
    for anchor in 0..n {
        for &o in kind.orientations() {
            let w = kind.oriented_window(o);
            if !w.matches(c, anchor) {
                continue;
            }
            let last = w.len() - 1;
            let to_vertex = |i: usize| (anchor + i) % n;
            let owner = kind.owner_offset().map(|off| match o {
                Orientation::Normal => to_vertex(off),
                Orientation::Mirrored => to_vertex(last - off),
            });
            let members = match owner {
                Some(v) => vec![v],
                None => w.codeword_offsets().map(to_vertex).collect(),
            };
            out.push(PatternOccurrence { pattern: kind, anchor, orientation: o, owner, members });
        }
    }
    Some(out)
}

pub fn detect_patterns(c: &Code, family: Family) -> PatternScan {
    let kinds: &[PatternKind] = match family {
        Family::Id => &PatternKind::ID_FAMILY,
        Family::Ld => &PatternKind::LD_FAMILY,
    };
    let mut scan = PatternScan::default();
    for &k in kinds {
        match scan_pattern(c, k) {
            Some(occ) => scan.occurrences.extend(occ),
            None => scan.unscannable.push(k),
        }
    }
    scan
}
