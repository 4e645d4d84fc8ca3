//! Closed-form identifying codes in `C_n(1,3)` and the exact values of
//! `γ^ID(C_n(1,3))` (n ≥ 11) and `γ^LD(C_n(1,3))` (n ≥ 13).

use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};

/// Offsets of the four codewords in each length-11 block of `C_q`.
pub const BLOCK: [usize; 4] = [0, 1, 4, 5];

/// Tail offsets (relative to `11q`) appended to `C_q` for `n = 11q + r`.
const TAILS: [&[usize]; 11] = [
    &[],
    &[0],
    &[0, 1],
    &[0, 1],
    &[0, 1],
    &[0, 1, 2],
    &[0, 1, 2],
    &[0, 1, 3],
    &[0, 1, 2, 3],
    &[0, 1, 2, 3],
    &[0, 1, 3, 4],
];

/// Codes beating the general tail construction at specific lengths.
/// For n = 27 the listed code has 10 codewords, which is `⌈4·27/11⌉`.
const SPECIAL: [(usize, &[usize]); 5] = [
    (13, &[0, 1, 4, 7, 8]),
    (16, &[0, 1, 4, 7, 10, 11]),
    (24, &[0, 1, 2, 6, 9, 10, 15, 16, 19]),
    (27, &[0, 1, 2, 6, 9, 12, 13, 18, 19, 22]),
    (35, &[0, 1, 6, 9, 10, 15, 16, 19, 24, 25, 26, 30, 34]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaKind {
    Id,
    Ld,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaSource {
    Formula,
    Table,
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaEntry {
    pub n: usize,
    pub kind: GammaKind,
    pub value: usize,
    pub source: GammaSource,
}

impl GammaEntry {
    pub fn formula(kind: GammaKind, n: usize) -> Result<Self> {
        let value = match kind {
            GammaKind::Id => gamma_id(n)?,
            GammaKind::Ld => gamma_ld(n)?,
        };
        Ok(GammaEntry { n, kind, value, source: GammaSource::Formula })
    }
}

/// `{11i + j : 0 <= i < q, j ∈ {0,1,4,5}}` in `Z_{11q}`.
pub fn base_code_cq(q: usize) -> Result<Code> {
    if q < 1 {
        return Err(Error::precondition("C_q needs q >= 1"));
    }
    Code::new(11 * q, (0..q).flat_map(|i| BLOCK.iter().map(move |j| 11 * i + j)))
}

/// The identifying code of `C_n(1,3)` built from `C_q` and a tail, or the
/// special code for the lengths where it is smaller.
pub fn id_code(n: usize) -> Result<Code> {
    if n < 11 {
        return Err(Error::precondition(format!("id_code needs n >= 11, got {n}")));
    }
    if let Some((_, members)) = SPECIAL.iter().find(|(m, _)| *m == n) {
        return Code::new(n, members.iter().copied());
    }
    let (q, r) = (n / 11, n % 11);
    let block = (0..q).flat_map(|i| BLOCK.iter().map(move |j| 11 * i + j));
    let tail = TAILS[r].iter().map(|t| 11 * q + t);
    Code::new(n, block.chain(tail))
}

/// Whether `id_code(n)` comes from the special table.
pub fn is_special_length(n: usize) -> bool {
    SPECIAL.iter().any(|(m, _)| *m == n)
}

/// `⌈4n/11⌉`.
pub fn id_floor(n: usize) -> usize {
    (4 * n).div_ceil(11)
}

/// `⌈n/3⌉`.
pub fn ld_floor(n: usize) -> usize {
    n.div_ceil(3)
}

/// `γ^ID(C_n(1,3))` for `n >= 11`.
pub fn gamma_id(n: usize) -> Result<usize> {
    if n < 11 {
        return Err(Error::precondition(format!("γ^ID formula covers n >= 11, got {n}")));
    }
    let r = n % 11;
    let bumped = if n <= 37 { r == 8 } else { matches!(r, 2 | 5 | 8) };
    Ok(id_floor(n) + usize::from(bumped))
}

/// `γ^LD(C_n(1,3))` for `n >= 13`.
pub fn gamma_ld(n: usize) -> Result<usize> {
    if n < 13 {
        return Err(Error::precondition(format!("γ^LD formula covers n >= 13, got {n}")));
    }
    Ok(ld_floor(n) + usize::from(!matches!(n % 6, 0 | 1 | 4)))
}
