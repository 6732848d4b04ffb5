//! Integer partitions, staircases, and the diagonal (checkerboard) view of
//! their Ferrers diagrams.
//!
//! Cells are `(a, b)`: `a` is the 0-based row counted from the longest row and
//! `b` the 0-based column, so a staircase of length `ell` holds exactly the
//! cells with `a + b <= ell - 1`, and the diagonal index of a cell is `a + b`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_staircase(&self) -> bool {
        let l = self.parts.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == l - i)
    }

    /// Cells `(a, b)` in row-major order.
    pub fn cells(&self) -> Vec<FerrersCell> {
        let mut cells = Vec::with_capacity(self.size());
        for (a, &p) in self.parts.iter().enumerate() {
            for b in 0..p {
                cells.push(FerrersCell { a, b });
            }
        }
        cells
    }

    pub fn contains(&self, cell: FerrersCell) -> bool {
        self.parts.get(cell.a).is_some_and(|&p| cell.b < p)
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook(&self, cell: FerrersCell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let arm = self.parts[cell.a] - cell.b - 1;
        let leg = self.parts[cell.a + 1..].iter().filter(|&&p| p > cell.b).count();
        Some(arm + leg + 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FerrersCell {
    pub a: usize,
    pub b: usize,
}

impl FerrersCell {
    pub fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub fn diagonal(&self) -> usize {
        self.a + self.b
    }
}

/// `(ell, ell - 1, ..., 1)`.
pub fn staircase(ell: usize) -> Result<Partition> {
    if ell == 0 {
        return Err(Error::domain("staircase length must be at least 1"));
    }
    Partition::new((1..=ell).rev().collect())
}

pub(crate) fn require_staircase(p: &Partition) -> Result<usize> {
    if p.length() == 0 || !p.is_staircase() {
        return Err(Error::domain(format!("{p} is not a staircase partition")));
    }
    Ok(p.length())
}

pub fn triangular(ell: usize) -> usize {
    ell * (ell + 1) / 2
}

/// The `ell` with `ell (ell + 1) / 2 = n`, when `n` is triangular.
pub fn is_triangular(n: usize) -> Option<usize> {
    // integer square root of 8n + 1
    let disc = 8u128 * n as u128 + 1;
    let mut s = (disc as f64).sqrt() as u128;
    while s * s > disc {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= disc {
        s += 1;
    }
    if s * s != disc || n == 0 {
        return None;
    }
    Some(((s - 1) / 2) as usize)
}

/// `lambda^t_i = #{ j : lambda_j >= i }`.
pub fn transpose(p: &Partition) -> Partition {
    let width = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|i| p.parts.iter().filter(|&&q| q >= i).count())
        .collect();
    Partition { parts }
}

/// Diagonal hook lengths of a staircase: the distinct-odd-parts partition in
/// bijection with it as a self-conjugate partition.
pub fn distinct_odd_parts(p: &Partition) -> Result<Partition> {
    require_staircase(p)?;
    let parts = (0..)
        .map(|i| FerrersCell::new(i, i))
        .map_while(|c| p.hook(c))
        .collect();
    Partition::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Black,
    Red,
}

/// Black when `a + b` is even; the corner cell is black.
pub fn checkerboard(p: &Partition) -> BTreeMap<FerrersCell, Colour> {
    p.cells()
        .into_iter()
        .map(|c| {
            let colour = if c.diagonal() % 2 == 0 {
                Colour::Black
            } else {
                Colour::Red
            };
            (c, colour)
        })
        .collect()
}

/// `(black, red)` cell counts.
pub fn checkerboard_counts(p: &Partition) -> (usize, usize) {
    let colouring = checkerboard(p);
    let black = colouring.values().filter(|&&c| c == Colour::Black).count();
    (black, colouring.len() - black)
}

/// `B`/`R` grid with the longest row at the bottom, one text row per part.
pub fn checkerboard_ascii(p: &Partition) -> String {
    let colouring = checkerboard(p);
    let mut out = String::new();
    for (a, &len) in p.parts.iter().enumerate().rev() {
        for b in 0..len {
            out.push(match colouring[&FerrersCell::new(a, b)] {
                Colour::Black => 'B',
                Colour::Red => 'R',
            });
        }
        out.push('\n');
    }
    out
}

/// One coefficient comparison in a truncated generating-function check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfRow {
    pub z_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_degree: Option<usize>,
    /// Coefficient of the truncated closed form.
    pub closed_form: i64,
    /// Coefficient of the term-wise sum it is claimed to equal.
    pub term_sum: i64,
    #[serde(rename = "match")]
    pub matches: bool,
    /// The row lies outside the range the sum is defined on.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfReport {
    pub description: String,
    pub rows: Vec<GfRow>,
}

impl GfReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &GfRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

/// Power-series quotient `num / den` truncated to degrees `0..=n`; `den[0]` must be 1.
pub(crate) fn series_div(num: &[i64], den: &[i64], n: usize) -> Vec<i64> {
    assert_eq!(den.first(), Some(&1), "series denominator must have unit constant term");
    let mut out = vec![0i64; n + 1];
    for k in 0..=n {
        let mut c = num.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(den.len() - 1) {
            c -= den[j] * out[k - j];
        }
        out[k] = c;
    }
    out
}

/// Compares `z / (1 - z)^3` through `z^n` with the triangular numbers.
/// Index 0 is flagged degenerate: no staircase has length 0.
pub fn triangular_gf_check(n: usize) -> Result<GfReport> {
    if n == 0 {
        return Err(Error::domain("truncation order must be at least 1"));
    }
    let series = series_div(&[0, 1], &[1, -3, 3, -1], n);
    let rows = series
        .iter()
        .enumerate()
        .map(|(r, &c)| {
            let t = triangular(r) as i64;
            GfRow {
                z_degree: r,
                e_degree: None,
                closed_form: c,
                term_sum: t,
                matches: c == t,
                degenerate: r == 0,
            }
        })
        .collect();
    Ok(GfReport {
        description: format!("z/(1-z)^3 vs sum P(r) z^r, r = 0..={n}"),
        rows,
    })
}
