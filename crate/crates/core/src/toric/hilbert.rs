use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{coprime, mono_degree, MonomialIdeal};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::Limits;

/// `H(t) = numerator(t) / (1 - t)^nvars` for the quotient by a monomial ideal.
///
/// `dimension` is the Krull dimension of the affine quotient and `degree` the
/// numerator with all `(1 - t)` factors removed, evaluated at 1. The unit
/// ideal has numerator 0, dimension 0 and degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    pub numerator: IntPolynomial,
    pub dimension: usize,
    pub degree: u64,
}

impl HilbertData {
    /// Coefficients of `H(t)` through `t^dmax`.
    pub fn series(&self, dmax: usize) -> Vec<BigInt> {
        // multiply by (1 - t)^(-1) nvars times: running prefix sums
        let mut c: Vec<BigInt> = (0..=dmax).map(|d| self.numerator.coeff(d)).collect();
        for _ in 0..self.nvars {
            for d in 1..=dmax {
                let prev = c[d - 1].clone();
                c[d] += prev;
            }
        }
        c
    }
}

pub fn hilbert(mi: &MonomialIdeal) -> Result<HilbertData> {
    hilbert_with(mi, &Limits::default())
}

pub fn hilbert_with(mi: &MonomialIdeal, limits: &Limits) -> Result<HilbertData> {
    if mi.nvars() > limits.max_hilbert_vars {
        return Err(Error::resource("Hilbert series variables", limits.max_hilbert_vars));
    }
    if mi.generators().len() > limits.max_hilbert_gens {
        return Err(Error::resource("Hilbert series generators", limits.max_hilbert_gens));
    }
    let numerator = numerator(mi.nvars(), mi.generators().to_vec());
    if numerator.is_zero() {
        return Ok(HilbertData {
            nvars: mi.nvars(),
            numerator,
            dimension: 0,
            degree: 0,
        });
    }
    // strip_root divides by (t - 1); the numerator carries (1 - t)^mult
    let (mult, reduced) = numerator.strip_root(1);
    let at_one = reduced.eval_i64(1);
    let at_one = if mult % 2 == 1 { -at_one } else { at_one };
    let degree = at_one
        .to_u64()
        .ok_or_else(|| Error::domain("Hilbert numerator has non-positive value at 1"))?;
    Ok(HilbertData {
        nvars: mi.nvars(),
        numerator,
        dimension: mi.nvars() - mult,
        degree,
    })
}

/// `N(I) = N(I + <x_i>) + t N(I : x_i)`, ending at pairwise coprime generators
/// where `N = prod (1 - t^deg g)`.
fn numerator(nvars: usize, gens: Vec<Vec<u32>>) -> IntPolynomial {
    if gens.iter().any(|g| mono_degree(g) == 0) {
        return IntPolynomial::zero();
    }
    let pivot = (0..nvars)
        .filter(|&i| gens.iter().filter(|g| g[i] > 0).count() >= 2)
        .max_by_key(|&i| (gens.iter().filter(|g| g[i] > 0).count(), std::cmp::Reverse(i)));
    let Some(i) = pivot else {
        debug_assert!(gens.iter().enumerate().all(|(a, g)| gens[a + 1..].iter().all(|h| coprime(g, h))));
        return gens.iter().fold(IntPolynomial::one(), |acc, g| {
            let d = mono_degree(g) as usize;
            &acc * &(&IntPolynomial::one() - &IntPolynomial::monomial(1, d))
        });
    };
    let mut xi = vec![0u32; nvars];
    xi[i] = 1;
    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[i] == 0).cloned().collect();
    plus.push(xi);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[i] = h[i].saturating_sub(1);
            h
        })
        .collect();
    let plus = MonomialIdeal::minimal(nvars, plus);
    let colon = MonomialIdeal::minimal(nvars, colon);
    &numerator(nvars, plus.generators().to_vec()) + &numerator(nvars, colon.generators().to_vec()).shift(1)
}

/// Number of monomials of each degree `0..=dmax` outside the ideal, by listing them.
pub fn standard_monomial_counts(mi: &MonomialIdeal, dmax: usize) -> Vec<u64> {
    let n = mi.nvars();
    let mut counts = vec![0u64; dmax + 1];
    let mut m = vec![0u32; n];
    fn walk(mi: &MonomialIdeal, m: &mut Vec<u32>, var: usize, left: u32, deg: usize, counts: &mut [u64]) {
        if var + 1 == m.len() {
            m[var] = left;
            if !mi.contains(m) {
                counts[deg] += 1;
            }
            return;
        }
        for e in 0..=left {
            m[var] = e;
            walk(mi, m, var + 1, left - e, deg, counts);
        }
        m[var] = 0;
    }
    for d in 0..=dmax {
        if n == 0 {
            counts[d] = u64::from(d == 0 && !mi.is_unit());
            continue;
        }
        walk(mi, &mut m, 0, d as u32, d, &mut counts);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, g.iter().map(|v| v.to_vec()).collect()).unwrap()
    }

    fn agrees(m: &MonomialIdeal) -> bool {
        let h = hilbert(m).unwrap();
        let series: Vec<u64> = h.series(8).iter().map(|c| c.to_u64().unwrap()).collect();
        series == standard_monomial_counts(m, 8)
    }

    #[test]
    fn one_quadric() {
        let m = mi(4, &[&[1, 0, 1, 0]]);
        let h = hilbert(&m).unwrap();
        assert_eq!((h.dimension, h.degree), (3, 2));
        assert!(agrees(&m));
    }

    #[test]
    fn zero_ideal() {
        let h = hilbert(&MonomialIdeal::zero(5)).unwrap();
        assert_eq!((h.dimension, h.degree), (5, 1));
        assert_eq!(h.numerator, IntPolynomial::one());
    }

    #[test]
    fn two_coprime_quadrics() {
        let m = mi(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let h = hilbert(&m).unwrap();
        assert_eq!((h.dimension, h.degree), (2, 4));
        assert!(agrees(&m));
    }

    #[test]
    fn overlapping_generators_recurse() {
        // standard monomials 1, x0, x1, x1^2
        let m = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let h = hilbert(&m).unwrap();
        assert_eq!((h.dimension, h.degree), (0, 4));
        assert!(agrees(&m));
        let m = mi(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let h = hilbert(&m).unwrap();
        assert_eq!((h.dimension, h.degree), (1, 3));
        assert!(agrees(&m));
    }

    #[test]
    fn unit_ideal() {
        let h = hilbert(&mi(2, &[&[0, 0]])).unwrap();
        assert!(h.numerator.is_zero());
        assert_eq!(standard_monomial_counts(&mi(2, &[&[0, 0]]), 3), vec![0, 0, 0, 0]);
    }

    #[test]
    fn caps() {
        let limits = Limits {
            max_hilbert_vars: 2,
            ..Limits::default()
        };
        assert!(hilbert_with(&MonomialIdeal::zero(3), &limits).is_err());
    }
}
