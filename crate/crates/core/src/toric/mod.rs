//! Binomial ideals over monomial maps `x_i -> t^{w_i}`: a Buchberger engine
//! that never leaves pure-difference binomials, initial ideals, Hilbert
//! series of monomial ideals, and audits of the two conjectured ideal families.

mod conjecture;
mod groebner;
mod hilbert;

pub use conjecture::{
    cartoon_diagram, cartoon_ideal, conjecture1_check, conjecture1_check_with, conjecture2_check,
    conjecture2_check_with, Cartoon, CartoonEdge, CartoonNode, ConjectureReport, KernelProbe,
};
pub use groebner::{
    all_s_pairs_reduce, buchberger_binomial, buchberger_binomial_with, initial_ideal, normal_form,
    reduce_monomial, Certificate, GroebnerRun, SparsePoly,
};
pub use hilbert::{hilbert, hilbert_with, standard_monomial_counts, HilbertData};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Monomial = Vec<u32>;

pub(crate) fn mono_degree(m: &[u32]) -> u64 {
    m.iter().map(|&e| e as u64).sum()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// `a - b + c`, for `b | a`.
pub(crate) fn shift(a: &[u32], b: &[u32], c: &[u32]) -> Monomial {
    a.iter().zip(b).zip(c).map(|((&x, &y), &z)| x - y + z).collect()
}

pub(crate) fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x0 > x1 > ...`.
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => mono_degree(a).cmp(&mono_degree(b)).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        // less of the last variable is larger
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// `x^u - x^v`. The two monomials differ; they may share factors inside a
/// Gröbner basis, but generators built by [`Binomial::new`] do not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBinomial")]
pub struct Binomial {
    u: Monomial,
    v: Monomial,
}

#[derive(Deserialize)]
struct RawBinomial {
    u: Monomial,
    v: Monomial,
}

impl TryFrom<RawBinomial> for Binomial {
    type Error = Error;
    fn try_from(r: RawBinomial) -> Result<Self> {
        Binomial::new(r.u, r.v)
    }
}

impl Binomial {
    /// A generator with disjoint supports.
    pub fn new(u: Monomial, v: Monomial) -> Result<Self> {
        let b = Self::with_common(u, v)?;
        if !b.is_pure() {
            return Err(Error::domain(format!("{b} has overlapping supports")));
        }
        Ok(b)
    }

    /// No support condition; used for Gröbner basis elements.
    pub fn with_common(u: Monomial, v: Monomial) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::domain("exponent vectors differ in length"));
        }
        if u == v {
            return Err(Error::domain("binomial x^u - x^u is zero"));
        }
        Ok(Self { u, v })
    }

    /// `x_a x_b ... - x_c ...` from variable index lists (repeats raise powers).
    pub fn from_indices(nvars: usize, u: &[usize], v: &[usize]) -> Result<Self> {
        let mut a = vec![0u32; nvars];
        let mut b = vec![0u32; nvars];
        for (idx, m) in [(u, &mut a), (v, &mut b)] {
            for &i in idx {
                if i >= nvars {
                    return Err(Error::domain(format!("variable index {i} out of range")));
                }
                m[i] += 1;
            }
        }
        Self::new(a, b)
    }

    pub fn u(&self) -> &[u32] {
        &self.u
    }

    pub fn v(&self) -> &[u32] {
        &self.v
    }

    pub fn nvars(&self) -> usize {
        self.u.len()
    }

    /// Polynomial degree, `max(|u|, |v|)`.
    pub fn degree(&self) -> u64 {
        mono_degree(&self.u).max(mono_degree(&self.v))
    }

    pub fn is_pure(&self) -> bool {
        coprime(&self.u, &self.v)
    }

    /// Both terms divided by their gcd.
    pub fn cancelled(&self) -> Binomial {
        let g: Monomial = self.u.iter().zip(&self.v).map(|(&a, &b)| a.min(b)).collect();
        Binomial {
            u: quotient(&self.u, &g),
            v: quotient(&self.v, &g),
        }
    }

    pub fn negated(&self) -> Binomial {
        Binomial {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    /// Leading term first under `order`.
    pub fn oriented(&self, order: MonomialOrder) -> Binomial {
        if order.cmp(&self.u, &self.v) == Ordering::Less {
            self.negated()
        } else {
            self.clone()
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        format!("{} - {}", monomial_string(&self.u, names), monomial_string(&self.v, names))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&index_names(self.nvars())))
    }
}

pub fn index_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn monomial_string(m: &[u32], names: &[String]) -> String {
    let factors: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// True iff `sum u_i w_i = sum v_i w_i`.
pub fn in_kernel(b: &Binomial, weights: &[u64]) -> Result<bool> {
    if weights.len() != b.nvars() {
        return Err(Error::domain(format!(
            "{} weights for {} variables",
            weights.len(),
            b.nvars()
        )));
    }
    let dot = |m: &[u32]| -> u128 { m.iter().zip(weights).map(|(&e, &w)| e as u128 * w as u128).sum() };
    Ok(dot(&b.u) == dot(&b.v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialIdeal {
    pub nvars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    pub generators: Vec<Binomial>,
}

impl BinomialIdeal {
    pub fn new(nvars: usize, weights: Option<Vec<u64>>, generators: Vec<Binomial>) -> Result<Self> {
        if generators.iter().any(|g| g.nvars() != nvars) {
            return Err(Error::domain(format!("generator outside {nvars} variables")));
        }
        if weights.as_ref().is_some_and(|w| w.len() != nvars) {
            return Err(Error::domain("weight vector length differs from nvars"));
        }
        Ok(Self {
            nvars,
            weights,
            generators,
        })
    }

    /// `x{w}` when weights are present, else `x{i}`.
    pub fn variable_names(&self) -> Vec<String> {
        match &self.weights {
            Some(w) => w.iter().map(|w| format!("x{w}")).collect(),
            None => index_names(self.nvars),
        }
    }

    pub fn generator_strings(&self) -> Vec<String> {
        let names = self.variable_names();
        self.generators.iter().map(|g| g.display_with(&names)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serializes")
    }
}

/// Minimal generators of a monomial ideal, sorted; empty for the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.len() != nvars) {
            return Err(Error::domain(format!("monomial outside {nvars} variables")));
        }
        Ok(Self::minimal(nvars, gens))
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: vec![] }
    }

    pub(crate) fn minimal(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| mono_degree(a).cmp(&mono_degree(b)).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| divides(k, &g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Self { nvars, gens: kept }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| mono_degree(g) == 0)
    }

    pub fn display_with(&self, names: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| monomial_string(g, names)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_leads() {
        let o = MonomialOrder::Grevlex;
        // x1^2 > x0*x2 in grevlex
        assert_eq!(o.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 0, 2, 0], &[0, 1, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
    }

    #[test]
    fn kernel_membership() {
        let w = [1, 2, 3, 4, 5, 9, 6];
        let g = Binomial::from_indices(7, &[0, 2, 4], &[5]).unwrap();
        assert!(in_kernel(&g, &w).unwrap());
        let q = Binomial::from_indices(4, &[0, 2], &[1, 1]).unwrap();
        assert!(in_kernel(&q, &[0, 1, 2, 3]).unwrap());
        let bad = Binomial::from_indices(2, &[0], &[1]).unwrap();
        assert!(!in_kernel(&bad, &[1, 2]).unwrap());
        assert!(in_kernel(&bad, &[1, 2, 3]).is_err());
    }

    #[test]
    fn binomial_validation() {
        assert!(Binomial::new(vec![1, 1], vec![0, 1]).is_err());
        assert!(Binomial::new(vec![1, 0], vec![1, 0]).is_err());
        assert!(Binomial::new(vec![1], vec![0, 1]).is_err());
        let b = Binomial::with_common(vec![2, 1], vec![1, 2]).unwrap();
        assert_eq!(b.cancelled(), Binomial::new(vec![1, 0], vec![0, 1]).unwrap());
    }

    #[test]
    fn display_and_json() {
        let g = Binomial::from_indices(4, &[0, 2], &[1, 1]).unwrap();
        assert_eq!(g.to_string(), "x0*x2 - x1^2");
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"u":[1,0,1,0],"v":[0,2,0,0]}"#);
        let back: Binomial = serde_json::from_str(r#"{"u":[1,0,1,0],"v":[0,2,0,0]}"#).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Binomial>(r#"{"u":[1],"v":[1]}"#).is_err());
        let id = BinomialIdeal::new(4, Some(vec![0, 1, 2, 3]), vec![g]).unwrap();
        assert_eq!(
            id.to_json(),
            r#"{"nvars":4,"weights":[0,1,2,3],"generators":[{"u":[1,0,1,0],"v":[0,2,0,0]}]}"#
        );
    }

    #[test]
    fn monomial_ideal_minimalizes() {
        let mi = MonomialIdeal::new(2, vec![vec![1, 1], vec![1, 0], vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(mi.generators(), &[vec![0, 2], vec![1, 0]]);
        assert!(mi.contains(&[2, 0]) && !mi.contains(&[0, 1]));
    }
}
