use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{coprime, divides, lcm, mono_degree, quotient, shift, Binomial, Monomial, MonomialIdeal, MonomialOrder};
use crate::error::{Error, Result};
use crate::Limits;

/// Sparse integer polynomial, monomial to coefficient.
pub type SparsePoly = BTreeMap<Monomial, i64>;

/// `sum c * x^m * g_i` over the input generators `g_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub terms: BTreeMap<(usize, Monomial), i64>,
}

impl Certificate {
    fn input(i: usize, nvars: usize) -> Self {
        Self {
            terms: BTreeMap::from([((i, vec![0; nvars]), 1)]),
        }
    }

    fn axpy(&mut self, c: i64, m: &[u32], other: &Certificate) {
        for ((i, mm), &k) in &other.terms {
            let key: (usize, Monomial) = (*i, mm.iter().zip(m).map(|(a, b)| a + b).collect());
            let e = self.terms.entry(key.clone()).or_insert(0);
            *e += c * k;
            if *e == 0 {
                self.terms.remove(&key);
            }
        }
    }

    fn negate(&mut self) {
        for v in self.terms.values_mut() {
            *v = -*v;
        }
    }

    /// Expands the combination over `gens`.
    pub fn expand(&self, gens: &[Binomial]) -> SparsePoly {
        let mut out = SparsePoly::new();
        for ((i, m), &c) in &self.terms {
            let g = &gens[*i];
            for (mono, sign) in [(g.u(), 1), (g.v(), -1)] {
                let key: Monomial = mono.iter().zip(m).map(|(a, b)| a + b).collect();
                let e = out.entry(key.clone()).or_insert(0);
                *e += sign * c;
                if *e == 0 {
                    out.remove(&key);
                }
            }
        }
        out
    }

    /// True iff the combination expands to exactly `target`.
    pub fn proves(&self, gens: &[Binomial], target: &Binomial) -> bool {
        let mut want = SparsePoly::new();
        want.insert(target.u().to_vec(), 1);
        want.insert(target.v().to_vec(), -1);
        self.expand(gens) == want
    }
}

/// `x^p - x^q` with an optional certificate for exactly that polynomial.
#[derive(Clone, Debug)]
struct Elem {
    p: Monomial,
    q: Monomial,
    cert: Option<Certificate>,
}

impl Elem {
    fn orient(&mut self, order: MonomialOrder) {
        if order.cmp(&self.p, &self.q) == Ordering::Less {
            std::mem::swap(&mut self.p, &mut self.q);
            if let Some(c) = self.cert.as_mut() {
                c.negate();
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.p == self.q
    }
}

/// Rewrites both terms of `f` until neither is divisible by a leading term
/// of `basis`. Each step replaces a term by a strictly smaller one, so this
/// terminates; the result stays a difference of two monomials.
fn reduce(f: &mut Elem, basis: &[Elem], skip: Option<usize>) {
    loop {
        if f.is_zero() {
            return;
        }
        let mut changed = false;
        for (i, g) in basis.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            if divides(&g.p, &f.p) {
                let m = quotient(&f.p, &g.p);
                f.p = shift(&f.p, &g.p, &g.q);
                if let (Some(c), Some(gc)) = (f.cert.as_mut(), g.cert.as_ref()) {
                    c.axpy(-1, &m, gc);
                }
                changed = true;
                break;
            }
            if divides(&g.p, &f.q) {
                let m = quotient(&f.q, &g.p);
                f.q = shift(&f.q, &g.p, &g.q);
                if let (Some(c), Some(gc)) = (f.cert.as_mut(), g.cert.as_ref()) {
                    c.axpy(1, &m, gc);
                }
                changed = true;
                break;
            }
        }
        if !changed {
            return;
        }
    }
}

fn s_poly(f: &Elem, g: &Elem) -> Elem {
    let l = lcm(&f.p, &g.p);
    let mf = quotient(&l, &f.p);
    let mg = quotient(&l, &g.p);
    // x^mf f - x^mg g = x^{mg+q_g} - x^{mf+q_f}
    let cert = match (&f.cert, &g.cert) {
        (Some(cf), Some(cg)) => {
            let mut c = Certificate::default();
            c.axpy(1, &mf, cf);
            c.axpy(-1, &mg, cg);
            Some(c)
        }
        _ => None,
    };
    Elem {
        p: shift(&l, &g.p, &g.q),
        q: shift(&l, &f.p, &f.q),
        cert,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerRun {
    pub order: MonomialOrder,
    /// Reduced basis, leading term first in each element, sorted by leading term.
    pub basis: Vec<Binomial>,
    /// One per basis element when tracking was requested.
    pub certificates: Option<Vec<Certificate>>,
    pub pairs_reduced: usize,
    pub pairs_skipped: usize,
}

pub fn buchberger_binomial(gens: &[Binomial], order: MonomialOrder) -> Result<Vec<Binomial>> {
    Ok(buchberger_binomial_with(gens, order, &Limits::default(), false)?.basis)
}

/// Buchberger's algorithm with the coprime-leads criterion and pairs taken
/// by ascending lcm degree, ties broken by the lcm vector and indices.
pub fn buchberger_binomial_with(
    gens: &[Binomial],
    order: MonomialOrder,
    limits: &Limits,
    track: bool,
) -> Result<GroebnerRun> {
    let Some(first) = gens.first() else {
        return Err(Error::domain("Gröbner basis of an empty generator list"));
    };
    let n = first.nvars();
    if gens.iter().any(|g| g.nvars() != n) {
        return Err(Error::domain("generators live in different rings"));
    }

    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: BTreeSet<(u64, Monomial, usize, usize)> = BTreeSet::new();
    let push = |mut e: Elem, basis: &mut Vec<Elem>, pairs: &mut BTreeSet<_>| -> Result<()> {
        e.orient(order);
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let l = lcm(&b.p, &e.p);
            pairs.insert((mono_degree(&l), l, i, j));
        }
        basis.push(e);
        if basis.len() > limits.max_basis {
            return Err(Error::resource("Gröbner basis size", limits.max_basis));
        }
        Ok(())
    };

    for (i, g) in gens.iter().enumerate() {
        let mut e = Elem {
            p: g.u().to_vec(),
            q: g.v().to_vec(),
            cert: track.then(|| Certificate::input(i, n)),
        };
        reduce(&mut e, &basis, None);
        if !e.is_zero() {
            push(e, &mut basis, &mut pairs)?;
        }
    }

    let (mut reduced, mut skipped) = (0, 0);
    while let Some((_, _, i, j)) = pairs.pop_first() {
        if coprime(&basis[i].p, &basis[j].p) {
            skipped += 1;
            continue;
        }
        reduced += 1;
        let mut s = s_poly(&basis[i], &basis[j]);
        reduce(&mut s, &basis, None);
        if !s.is_zero() {
            push(s, &mut basis, &mut pairs)?;
        }
    }

    // minimal: drop elements whose lead is divisible by another lead
    let mut keep: Vec<Elem> = Vec::new();
    for (i, e) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, f)| {
            j != i && divides(&f.p, &e.p) && (f.p != e.p || j < i)
        });
        if !redundant {
            keep.push(e.clone());
        }
    }
    // reduced: normalize each tail against the others
    for i in 0..keep.len() {
        let mut e = keep[i].clone();
        reduce(&mut e, &keep, Some(i));
        debug_assert!(!e.is_zero() && e.p == keep[i].p, "leading term reducible in minimal basis");
        e.orient(order);
        keep[i] = e;
    }
    keep.sort_by(|a, b| order.cmp(&a.p, &b.p).then_with(|| order.cmp(&a.q, &b.q)));

    let certificates = track.then(|| keep.iter().map(|e| e.cert.clone().expect("tracked")).collect());
    let basis = keep
        .into_iter()
        .map(|e| Binomial::with_common(e.p, e.q).expect("nonzero element"))
        .collect();
    Ok(GroebnerRun {
        order,
        basis,
        certificates,
        pairs_reduced: reduced,
        pairs_skipped: skipped,
    })
}

fn elems(gb: &[Binomial], order: MonomialOrder) -> Vec<Elem> {
    gb.iter()
        .map(|b| {
            let b = b.oriented(order);
            Elem {
                p: b.u().to_vec(),
                q: b.v().to_vec(),
                cert: None,
            }
        })
        .collect()
}

/// Normal form of `f` modulo `gb`; `None` when it reduces to zero.
pub fn normal_form(f: &Binomial, gb: &[Binomial], order: MonomialOrder) -> Option<Binomial> {
    let mut e = Elem {
        p: f.u().to_vec(),
        q: f.v().to_vec(),
        cert: None,
    };
    reduce(&mut e, &elems(gb, order), None);
    if e.is_zero() {
        None
    } else {
        e.orient(order);
        Some(Binomial::with_common(e.p, e.q).expect("nonzero"))
    }
}

/// Standard monomial that `m` rewrites to modulo `gb`.
pub fn reduce_monomial(m: &[u32], gb: &[Binomial], order: MonomialOrder) -> Monomial {
    let basis = elems(gb, order);
    let mut cur = m.to_vec();
    while let Some(g) = basis.iter().find(|g| divides(&g.p, &cur)) {
        cur = shift(&cur, &g.p, &g.q);
    }
    cur
}

/// Every S-pair, without criteria, reduces to zero.
pub fn all_s_pairs_reduce(gb: &[Binomial], order: MonomialOrder) -> bool {
    let basis = elems(gb, order);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let mut s = s_poly(&basis[i], &basis[j]);
            reduce(&mut s, &basis, None);
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Leading terms of `gb` under `order`, minimalized.
pub fn initial_ideal(gb: &[Binomial], order: MonomialOrder, nvars: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::new(nvars, gb.iter().map(|b| b.oriented(order).u().to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, u: &[usize], v: &[usize]) -> Binomial {
        Binomial::from_indices(n, u, v).unwrap()
    }

    #[test]
    fn twisted_pair_is_already_a_basis() {
        let gens = vec![b(4, &[0, 2], &[1, 1]), b(4, &[1, 3], &[2, 2])];
        let run = buchberger_binomial_with(&gens, MonomialOrder::Grevlex, &Limits::default(), true).unwrap();
        assert_eq!(run.basis.len(), 2);
        // leads x1^2 and x2^2 are coprime
        assert_eq!(run.basis[0].u(), &[0, 0, 2, 0]);
        assert_eq!(run.basis[1].u(), &[0, 2, 0, 0]);
        assert!(all_s_pairs_reduce(&run.basis, MonomialOrder::Grevlex));
        let ini = initial_ideal(&run.basis, MonomialOrder::Grevlex, 4).unwrap();
        assert_eq!(ini.generators(), &[vec![0, 0, 2, 0], vec![0, 2, 0, 0]]);
    }

    #[test]
    fn completion_with_certificates() {
        // leads x1^2 and x1x2 overlap; the S-pair adds x0x2^2 - x0x1x3
        let gens = vec![b(4, &[0, 2], &[1, 1]), b(4, &[0, 3], &[1, 2])];
        let run = buchberger_binomial_with(&gens, MonomialOrder::Grevlex, &Limits::default(), true).unwrap();
        assert_eq!(run.basis.len(), 3);
        assert!(run.basis.contains(&Binomial::with_common(vec![1, 0, 2, 0], vec![1, 1, 0, 1]).unwrap()));
        assert!(all_s_pairs_reduce(&run.basis, MonomialOrder::Grevlex));
        let certs = run.certificates.as_ref().unwrap();
        for (g, c) in run.basis.iter().zip(certs) {
            assert!(c.proves(&gens, g), "{g} lacks a certificate");
        }
    }

    #[test]
    fn single_binomial() {
        let g = b(3, &[1, 1], &[2]);
        let gb = buchberger_binomial(std::slice::from_ref(&g), MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb, vec![g]);
        assert!(buchberger_binomial(&[], MonomialOrder::Grevlex).is_err());
    }

    #[test]
    fn common_factors_are_kept() {
        // x0^2 - x0x1 = x0 (x0 - x1); the ideal does not contain x0 - x1
        let g = Binomial::with_common(vec![2, 0], vec![1, 1]).unwrap();
        let gb = buchberger_binomial(&[g], MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.len(), 1);
        let lin = b(2, &[0], &[1]);
        assert!(normal_form(&lin, &gb, MonomialOrder::Grevlex).is_some());
    }

    #[test]
    fn normal_forms() {
        let gb = vec![b(3, &[0, 0], &[1])];
        assert!(normal_form(&b(3, &[0, 0, 0, 0], &[1, 1]), &gb, MonomialOrder::Grevlex).is_none());
        assert_eq!(reduce_monomial(&[3, 0, 0], &gb, MonomialOrder::Grevlex), vec![1, 1, 0]);
    }

    #[test]
    fn basis_guard() {
        let limits = Limits {
            max_basis: 1,
            ..Limits::default()
        };
        let gens = vec![b(4, &[0, 2], &[1, 1]), b(4, &[1, 3], &[2, 2])];
        assert!(matches!(
            buchberger_binomial_with(&gens, MonomialOrder::Grevlex, &limits, false),
            Err(Error::Resource { .. })
        ));
    }
}
