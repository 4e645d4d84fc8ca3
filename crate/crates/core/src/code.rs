//! Codes: subsets of `Z_n`, with the two literal syntaxes used on the
//! command line (`0,1,4,5` and `xxooxx...`).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    members: VertexSet,
}

impl Code {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        Ok(Code { members: VertexSet::from_vertices(n, members)? })
    }

    pub fn from_set(members: VertexSet) -> Self {
        Code { members }
    }

    pub fn empty(n: usize) -> Self {
        Code { members: VertexSet::new(n) }
    }

    pub fn full(n: usize) -> Self {
        Code { members: VertexSet::full(n) }
    }

    /// Code from the low `n` bits of a mask (bit `i` set means `i` is a codeword).
    pub fn from_mask(n: usize, mask: u128) -> Self {
        assert!(n <= 128);
        let mut members = VertexSet::new(n);
        let mut m = mask & low_bits(n);
        while m != 0 {
            members.insert(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        Code { members }
    }

    pub fn to_mask(&self) -> Option<u128> {
        (self.n() <= 128).then(|| self.iter().fold(0u128, |m, v| m | 1 << v))
    }

    /// Parses either a comma-separated vertex list or an x/o pattern of
    /// length `n`. An x/o pattern is only accepted when its length equals `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t = s.trim();
        if !t.is_empty() && t.chars().all(|c| matches!(c, 'x' | 'o' | 'X' | 'O')) {
            if t.len() != n {
                return Err(Error::Parse(format!(
                    "pattern {t:?} has length {} but the graph has {n} vertices",
                    t.len()
                )));
            }
            return Ok(Self::from_pattern(t));
        }
        let mut members = Vec::new();
        for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let v: usize =
                part.parse().map_err(|_| Error::Parse(format!("bad vertex {part:?} in code {s:?}")))?;
            members.push(v);
        }
        Code::new(n, members)
    }

    /// Code from an already validated x/o string; its length is `n`.
    fn from_pattern(p: &str) -> Self {
        let mut members = VertexSet::new(p.len());
        for (i, c) in p.chars().enumerate() {
            if c == 'x' || c == 'X' {
                members.insert(i);
            }
        }
        Code { members }
    }

    pub fn n(&self) -> usize {
        self.members.universe()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.members.rank(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    /// `c + t`, elementwise mod n.
    pub fn rotate(&self, t: usize) -> Code {
        let n = self.n();
        Code::new(n, self.iter().map(|v| (v + t) % n)).expect("in range")
    }

    /// `-c`, elementwise mod n.
    pub fn reflect(&self) -> Code {
        let n = self.n();
        Code::new(n, self.iter().map(|v| (n - v) % n)).expect("in range")
    }

    /// The x/o string, `x` at codeword positions.
    pub fn to_pattern(&self) -> String {
        (0..self.n()).map(|v| if self.contains(v) { 'x' } else { 'o' }).collect()
    }

    /// The comma-separated vertex list.
    pub fn to_list(&self) -> String {
        self.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn low_bits(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {:?})", self.n(), self.members)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list())
    }
}

/// JSON form: `{"n": 11, "members": [0,1,4,5], "pattern": "xxooxxooooo"}`.
#[derive(Serialize, Deserialize)]
struct CodeRepr {
    n: usize,
    members: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pattern: Option<String>,
}

impl Serialize for Code {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeRepr { n: self.n(), members: self.to_vec(), pattern: Some(self.to_pattern()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Code {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CodeRepr::deserialize(d)?;
        let c = Code::new(repr.n, repr.members).map_err(serde::de::Error::custom)?;
        match repr.pattern {
            Some(p) if p != c.to_pattern() => {
                Err(serde::de::Error::custom(format!("pattern {p:?} disagrees with members")))
            }
            _ => Ok(c),
        }
    }
}
