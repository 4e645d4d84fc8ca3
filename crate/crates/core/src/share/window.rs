//! Cyclic x/o/* windows over a code.

use std::fmt;

use crate::code::Code;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Codeword,
    NonCodeword,
    Any,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Window {
    cells: Vec<Cell>,
}

impl Window {
    pub fn parse(s: &str) -> Result<Self> {
        let cells = s
            .chars()
            .map(|ch| match ch {
                'x' => Ok(Cell::Codeword),
                'o' => Ok(Cell::NonCodeword),
                '*' => Ok(Cell::Any),
                _ => Err(Error::Parse(format!("bad window character {ch:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if cells.is_empty() {
            return Err(Error::Parse("empty window".into()));
        }
        Ok(Window { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i]
    }

    pub fn reversed(&self) -> Window {
        Window { cells: self.cells.iter().rev().copied().collect() }
    }

    /// Whether the window matches `c` with cell 0 at vertex `anchor`,
    /// indices taken mod n. A window longer than n may alias a vertex to
    /// several cells; it then matches only if all of them agree.
    pub fn matches(&self, c: &Code, anchor: usize) -> bool {
        let n = c.n();
        self.cells.iter().enumerate().all(|(i, cell)| match cell {
            Cell::Any => true,
            Cell::Codeword => c.contains((anchor + i) % n),
            Cell::NonCodeword => !c.contains((anchor + i) % n),
        })
    }

    /// Offsets of the `x` cells.
    pub fn codeword_offsets(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().enumerate().filter(|(_, c)| **c == Cell::Codeword).map(|(i, _)| i)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            f.write_str(match c {
                Cell::Codeword => "x",
                Cell::NonCodeword => "o",
                Cell::Any => "*",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Window({self})")
    }
}
