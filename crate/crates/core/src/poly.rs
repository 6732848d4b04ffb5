//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficient `i` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient list.
///
/// Serializes as a JSON array, constant term first. Coefficients that do not
/// fit in an `i64` are written as decimal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds from constant-term-first coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division by a monic-up-to-sign linear factor `x - root`.
    /// Returns `None` when `root` is not a root.
    pub fn div_linear(&self, root: &BigInt) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.eval(root).is_zero() {
            return None;
        }
        // synthetic division from the top
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + carry * root;
            quot[i - 1] = carry.clone();
        }
        Some(Self::from_coeffs(quot))
    }

    /// Largest `m` with `(x - root)^m` dividing `self`, and the cofactor.
    /// The zero polynomial returns `(0, 0)`.
    pub fn strip_root(&self, root: i64) -> (usize, Self) {
        let root = BigInt::from(root);
        let mut mult = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        while let Some(q) = cur.div_linear(&root) {
            mult += 1;
            cur = q;
        }
        (mult, cur)
    }

    /// Descending-degree text in the given variable, e.g. `k^4 - 4k^3 + 6k^2 - 3k`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs.is_one();
            if !unit || d == 0 {
                out.push_str(&abs.to_string());
            }
            match d {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Small(i64),
    Big(String),
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        let wire: Vec<WireCoeff> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => WireCoeff::Small(v),
                None => WireCoeff::Big(c.to_string()),
            })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Vec::<WireCoeff>::deserialize(d)?;
        let coeffs = wire
            .into_iter()
            .map(|w| match w {
                WireCoeff::Small(v) => Ok(BigInt::from(v)),
                WireCoeff::Big(s) => s.parse::<BigInt>().map_err(D::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_descending() {
        let p = IntPolynomial::from_i64(&[0, -3, 6, -4, 1]);
        assert_eq!(p.to_string_in("k"), "k^4 - 4k^3 + 6k^2 - 3k");
        assert_eq!(IntPolynomial::from_i64(&[1]).to_string_in("k"), "1");
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, -2]).to_string_in("t"), "-2t^2 - 1");
        assert_eq!(IntPolynomial::zero().to_string_in("k"), "0");
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn pow_and_eval() {
        // (k - 1)^3 at k = 4 is 27
        let p = IntPolynomial::from_i64(&[-1, 1]).pow(3);
        assert_eq!(p, IntPolynomial::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(p.eval_i64(4), BigInt::from(27));
    }

    #[test]
    fn strip_root_counts_multiplicity() {
        // (1 - t)^2 (1 + t)
        let one_minus_t = IntPolynomial::from_i64(&[1, -1]);
        let p = &one_minus_t.pow(2) * &IntPolynomial::from_i64(&[1, 1]);
        let (m, rest) = p.strip_root(1);
        assert_eq!(m, 2);
        assert_eq!(rest, IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(IntPolynomial::from_i64(&[3]).strip_root(1).0, 0);
    }

    #[test]
    fn serializes_constant_first() {
        let p = IntPolynomial::from_i64(&[1, 2, 3]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,3]");
        let big = IntPolynomial::from_coeffs(vec![BigInt::from(7), BigInt::from(i64::MAX) * 4]);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), big);
    }
}
