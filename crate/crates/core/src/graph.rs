//! Circulant graphs `C_n(d_1, …, d_k)`.
//!
//! The vertex set is `Z_n` and `u` is adjacent to `u ± d_i (mod n)`. A
//! generator equal to `n/2` contributes a single neighbor.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    generators: Vec<usize>,
    /// Nonzero neighbor offsets as residues mod `n`, deduplicated.
    offsets: Vec<usize>,
}

impl CirculantGraph {
    /// Builds `C_n(generators)`. Generators must be strictly increasing with
    /// `1 <= d <= n/2`; violating input is rejected, not normalized.
    pub fn new(n: usize, generators: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("need n >= 3, got {n}")));
        }
        if generators.is_empty() {
            return Err(Error::InvalidGraph("at least one generator required".into()));
        }
        if generators.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGraph(format!(
                "generators must be strictly increasing, got {generators:?}"
            )));
        }
        if let Some(&d) = generators.iter().find(|&&d| d == 0 || 2 * d > n) {
            return Err(Error::InvalidGraph(format!("generator {d} outside 1..={}", n / 2)));
        }
        let mut offsets = Vec::with_capacity(2 * generators.len());
        for &d in generators {
            offsets.push(d);
            if 2 * d != n {
                offsets.push(n - d);
            }
        }
        Ok(CirculantGraph { n, generators: generators.to_vec(), offsets })
    }

    /// `C_n(1,3)`.
    pub fn c13(n: usize) -> Result<Self> {
        Self::new(n, &[1, 3])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn max_generator(&self) -> usize {
        *self.generators.last().expect("nonempty generators")
    }

    pub fn degree(&self) -> usize {
        self.offsets.len()
    }

    /// `|N[v]|`, the same for every vertex.
    pub fn closed_size(&self) -> usize {
        self.offsets.len() + 1
    }

    /// True for `C_n(1,3)` with `3 < n/2`, the setting of the share analysis.
    pub fn is_c13_proper(&self) -> bool {
        self.generators == [1, 3] && self.n >= 7
    }

    #[inline]
    pub fn add(&self, v: usize, offset: isize) -> usize {
        (v as isize + offset).rem_euclid(self.n as isize) as usize
    }

    /// Open neighbors of `v`, unordered and without repetition.
    pub fn open_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        debug_assert!(v < self.n);
        self.offsets.iter().map(move |&o| (v + o) % self.n)
    }

    /// Closed neighborhood of `v`, starting with `v` itself.
    pub fn closed_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.open_iter(v))
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        VertexSet::from_vertices(self.n, self.open_iter(v))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        VertexSet::from_vertices(self.n, self.closed_iter(v))
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.open_iter(u).any(|w| w == v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// First pair `u < v` with `N[u] = N[v]`, if any. Such twins rule out
    /// identifying codes.
    pub fn closed_twins(&self) -> Option<(usize, usize)> {
        let key = |v: usize| {
            let mut k: Vec<usize> = self.closed_iter(v).collect();
            k.sort_unstable();
            k
        };
        let mut seen = std::collections::HashMap::new();
        for v in 0..self.n {
            if let Some(&u) = seen.get(&key(v)) {
                return Some((u, v));
            }
            seen.insert(key(v), v);
        }
        None
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}(", self.n)?;
        for (i, d) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `C<n>(<d1>,<d2>,...)`, e.g. `C46(1,3)`.
impl FromStr for CirculantGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected graph literal like C46(1,3), got {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix('C').or_else(|| s.strip_prefix('c')).ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let body = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let n: usize = rest[..open].trim().parse().map_err(|_| bad())?;
        let generators = body
            .split(',')
            .map(|d| d.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        CirculantGraph::new(n, &generators)
    }
}

impl Serialize for CirculantGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
