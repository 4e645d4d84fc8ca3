//! Dense bit-indexed vertex sets over `Z_n`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `{0, …, n-1}` stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Universe size `n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`, returning whether it was absent. Panics if `v >= n`.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range for Z_{}", self.n);
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of members strictly below `v`.
    pub fn rank(&self, v: usize) -> usize {
        let v = v.min(self.n);
        let (w, b) = (v / 64, v % 64);
        let full: usize = self.words[..w].iter().map(|x| x.count_ones() as usize).sum();
        let partial = if b == 0 { 0 } else { (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize };
        full + partial
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
