//! Chromatic polynomials by deletion–contraction, their closed forms for
//! square chains and the staircase graphs, and 2-colour separations.
//!
//! The polynomial variable `k` here always counts colours. The balance of a
//! separation is a different quantity and lives in [`ColourSeparation`].

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::blambda;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::partition::{self, Partition};
use crate::poly::IntPolynomial;
use crate::report::Compared;
use crate::{binomial, Limits};

fn k() -> IntPolynomial {
    IntPolynomial::x()
}

fn k_minus(c: i64) -> IntPolynomial {
    IntPolynomial::from_i64(&[-c, 1])
}

/// `k^2 - 3k + 3`, the square factor.
fn square_factor() -> IntPolynomial {
    IntPolynomial::from_i64(&[3, -3, 1])
}

pub fn chromatic_polynomial_dc(g: &SimpleGraph) -> Result<IntPolynomial> {
    chromatic_polynomial_dc_with(g, &Limits::default())
}

/// Deletion–contraction with forest stripping: vertices of degree 0 and 1
/// are peeled off as factors `k` and `k - 1` before every branch. Stripped
/// subgraphs are memoized on their relabelled edge lists, since contraction
/// alone does not lower the cycle rank.
pub fn chromatic_polynomial_dc_with(g: &SimpleGraph, limits: &Limits) -> Result<IntPolynomial> {
    let rank = g.cycle_rank();
    if rank > limits.max_cycle_rank {
        return Err(Error::resource(
            format!("deletion-contraction cycle rank {rank}"),
            limits.max_cycle_rank,
        ));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.vertex_count()];
    for (a, b) in g.edges() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let alive = vec![true; g.vertex_count()];
    Ok(dc(Work { adj, alive }, &mut HashMap::new()))
}

#[derive(Clone)]
struct Work {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl Work {
    fn remove(&mut self, v: usize) {
        for u in std::mem::take(&mut self.adj[v]) {
            self.adj[u].remove(&v);
        }
        self.alive[v] = false;
    }

    fn delete_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    /// Merges `b` into `a`; parallel edges collapse.
    fn contract(&mut self, a: usize, b: usize) {
        let nbrs = std::mem::take(&mut self.adj[b]);
        for u in nbrs {
            self.adj[u].remove(&b);
            if u != a {
                self.adj[u].insert(a);
                self.adj[a].insert(u);
            }
        }
        self.alive[b] = false;
    }

    /// Edge list with live vertices renumbered in order.
    fn key(&self, live: &[usize]) -> Vec<(u32, u32)> {
        let mut pos = vec![u32::MAX; self.alive.len()];
        for (i, &v) in live.iter().enumerate() {
            pos[v] = i as u32;
        }
        let mut out = Vec::new();
        for &v in live {
            out.extend(self.adj[v].iter().filter(|&&u| u > v).map(|&u| (pos[v], pos[u])));
        }
        out
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }
}

type Memo = HashMap<Vec<(u32, u32)>, IntPolynomial>;

fn dc(mut w: Work, memo: &mut Memo) -> IntPolynomial {
    let mut factor = IntPolynomial::one();
    loop {
        let leaf = w.live().find(|&v| w.adj[v].len() <= 1);
        match leaf {
            Some(v) => {
                factor = if w.adj[v].is_empty() {
                    &factor * &k()
                } else {
                    &factor * &k_minus(1)
                };
                w.remove(v);
            }
            None => break,
        }
    }
    let live: Vec<usize> = w.live().collect();
    if live.is_empty() {
        return factor;
    }
    // a lone cycle closes directly: (k - 1)^n + (-1)^n (k - 1)
    let edges: usize = live.iter().map(|&v| w.adj[v].len()).sum::<usize>() / 2;
    if edges == live.len() && live.iter().all(|&v| w.adj[v].len() == 2) && connected(&w, &live) {
        let n = live.len() as u32;
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let cyc = &k_minus(1).pow(n) + &k_minus(1).scale(&BigInt::from(sign));
        return &factor * &cyc;
    }
    let key = w.key(&live);
    if let Some(p) = memo.get(&key) {
        return &factor * p;
    }
    let a = *live
        .iter()
        .min_by_key(|&&v| (w.adj[v].len(), v))
        .expect("live vertex");
    let b = *w.adj[a].iter().next().expect("stripped graph has min degree 2");
    let mut deleted = w.clone();
    deleted.delete_edge(a, b);
    let mut contracted = w;
    contracted.contract(a, b);
    let p = &dc(deleted, memo) - &dc(contracted, memo);
    let out = &factor * &p;
    memo.insert(key, p);
    out
}

fn connected(w: &Work, live: &[usize]) -> bool {
    let mut seen = BTreeSet::from([live[0]]);
    let mut stack = vec![live[0]];
    while let Some(v) = stack.pop() {
        for &u in &w.adj[v] {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == live.len()
}

/// `k (k - 1) (k^2 - 3k + 3)^d` for a chain of `d` squares glued along edges.
pub fn chi_c4_chain(d: u32) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(Error::domain("square chain needs d >= 1"));
    }
    Ok(&(&k() * &k_minus(1)) * &square_factor().pow(d))
}

/// `k (k - 1)^3 (k^2 - 3k + 3)^m` with `m = C(ell - 1, 2)`.
pub fn chi_blambda_formula(ell: usize) -> Result<IntPolynomial> {
    if ell < 3 {
        return Err(Error::domain(format!("closed form needs ell >= 3, got {ell}")));
    }
    let m = binomial(ell as u64 - 1, 2) as u32;
    Ok(&(&k() * &k_minus(1).pow(3)) * &square_factor().pow(m))
}

/// Deletion–contraction result for `B_lambda` beside the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiAudit {
    pub ell: usize,
    pub vertices: usize,
    pub computed: IntPolynomial,
    pub formula: IntPolynomial,
    /// Degree of the computed polynomial against the closed form's degree.
    pub degree: Compared<usize>,
    pub polynomial_matches: bool,
    /// The computed degree equals the vertex count, as it must.
    pub degree_is_vertex_count: bool,
}

pub fn chi_blambda_audit(ell: usize) -> Result<ChiAudit> {
    chi_blambda_audit_with(ell, &Limits::default())
}

pub fn chi_blambda_audit_with(ell: usize, limits: &Limits) -> Result<ChiAudit> {
    let formula = chi_blambda_formula(ell)?;
    let b = blambda::build_blambda(&partition::staircase(ell)?)?;
    let computed = chromatic_polynomial_dc_with(&b.to_simple(), limits)?;
    let cdeg = computed.degree().unwrap_or(0);
    Ok(ChiAudit {
        ell,
        vertices: b.vertex_count(),
        degree: Compared::new(cdeg, formula.degree().unwrap_or(0)),
        polynomial_matches: computed == formula,
        degree_is_vertex_count: cdeg == b.vertex_count(),
        computed,
        formula,
    })
}

/// Smallest `t >= 1` with `chi(t) > 0`. Errors if the result disagrees with
/// the bipartiteness test, which decides `chi <= 2` independently.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::domain("chromatic number of the empty graph"));
    }
    let chi = chromatic_polynomial_dc_with(g, limits)?;
    let t = (1..=g.vertex_count())
        .find(|&t| {
            let v = chi.eval_i64(t as i64);
            !v.is_zero() && v.is_positive()
        })
        .expect("n colours always suffice");
    if (t <= 2) != g.is_bipartite() {
        return Err(Error::domain(format!(
            "chromatic number {t} disagrees with bipartiteness test"
        )));
    }
    Ok(t)
}

/// `mu` counts the odd-indexed layers `V_1, V_3, ...`, `kappa` the even ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColourSeparation {
    pub ell: usize,
    pub mu: usize,
    pub kappa: usize,
    pub balance: usize,
}

pub fn colour_separation(lambda: &Partition) -> Result<ColourSeparation> {
    let b = blambda::build_blambda(lambda)?;
    let sizes = b.layer_sizes();
    let mu: usize = sizes.iter().step_by(2).sum();
    let kappa: usize = sizes.iter().skip(1).step_by(2).sum();
    debug_assert!(mu > kappa);
    Ok(ColourSeparation {
        ell: b.length(),
        mu,
        kappa,
        balance: mu - kappa,
    })
}

/// Closed forms from the bound's proof: for odd `ell`,
/// `mu = ceil(ell/2)^2` and `kappa = floor(ell/2) (floor(ell/2) + 1)`; for
/// even `ell` the balance is `ceil(ell/2)`.
pub fn predicted_balance(ell: usize) -> usize {
    let (hi, lo) = (ell.div_ceil(2), ell / 2);
    if ell % 2 == 1 {
        hi * hi - lo * (lo + 1)
    } else {
        hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub ell: usize,
    pub balance: usize,
    /// `ceil(ell / 2)`.
    pub bound: usize,
    pub within_bound: bool,
    pub equality: bool,
    /// Equality as predicted by the proof's closed forms.
    pub predicted_equality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn all_within_bound(&self) -> bool {
        self.rows.iter().all(|r| r.within_bound)
    }

    pub fn equality_as_predicted(&self) -> bool {
        self.rows.iter().all(|r| r.equality == r.predicted_equality)
    }
}

pub fn balance_bound_check(ell_max: usize) -> Result<BoundReport> {
    if ell_max == 0 {
        return Err(Error::domain("ell_max must be at least 1"));
    }
    let rows = (1..=ell_max)
        .map(|ell| {
            let sep = colour_separation(&partition::staircase(ell)?)?;
            let bound = ell.div_ceil(2);
            Ok(BoundRow {
                ell,
                balance: sep.balance,
                bound,
                within_bound: sep.balance <= bound,
                equality: sep.balance == bound,
                predicted_equality: predicted_balance(ell) == bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport { rows })
}

/// Lengths `2k - 1` and `2k` both have balance `k`.
pub fn shared_balance_check(k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    let odd = colour_separation(&partition::staircase(2 * k - 1)?)?;
    let even = colour_separation(&partition::staircase(2 * k)?)?;
    Ok(odd.balance == k && even.balance == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::staircase;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn square_is_lemma_form() {
        let chi = chromatic_polynomial_dc(&SimpleGraph::cycle(4)).unwrap();
        assert_eq!(chi, chi_c4_chain(1).unwrap());
        assert_eq!(chi, p(&[0, -3, 6, -4, 1]));
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(chromatic_polynomial_dc(&SimpleGraph::empty(1)).unwrap(), k());
        assert_eq!(chromatic_polynomial_dc(&SimpleGraph::empty(0)).unwrap(), IntPolynomial::one());
        // triangle: k(k-1)(k-2)
        assert_eq!(
            chromatic_polynomial_dc(&SimpleGraph::complete(3)).unwrap(),
            p(&[0, 2, -3, 1])
        );
    }

    #[test]
    fn k4_needs_branching() {
        // k(k-1)(k-2)(k-3)
        assert_eq!(
            chromatic_polynomial_dc(&SimpleGraph::complete(4)).unwrap(),
            p(&[0, -6, 11, -6, 1])
        );
    }

    #[test]
    fn two_square_chain() {
        let expect = &(&k() * &k_minus(1)) * &p(&[9, -18, 15, -6, 1]);
        assert_eq!(chi_c4_chain(2).unwrap(), expect);
        assert_eq!(chromatic_polynomial_dc(&SimpleGraph::ladder(2)).unwrap(), expect);
    }

    #[test]
    fn three_square_chain_matches_dc() {
        let ladder = SimpleGraph::ladder(3);
        assert_eq!(ladder.vertex_count(), 8);
        assert_eq!(chromatic_polynomial_dc(&ladder).unwrap(), chi_c4_chain(3).unwrap());
    }

    #[test]
    fn blambda_321() {
        let b = blambda::build_blambda(&staircase(3).unwrap()).unwrap();
        let chi = chromatic_polynomial_dc(&b.to_simple()).unwrap();
        assert_eq!(chi, chi_blambda_formula(3).unwrap());
        let expanded = &(&(&k() * &k_minus(1).pow(5)) - &(&k() * &k_minus(1).pow(4)))
            + &(&k() * &k_minus(1).pow(3));
        assert_eq!(chi, expanded);
    }

    #[test]
    fn formula_degrees() {
        assert_eq!(chi_blambda_formula(4).unwrap().degree(), Some(10));
        assert_eq!(chi_blambda_formula(5).unwrap().degree(), Some(16));
        assert!(chi_blambda_formula(2).is_err());
    }

    #[test]
    fn audit_flags_degree_mismatch() {
        let a4 = chi_blambda_audit(4).unwrap();
        assert!(a4.polynomial_matches && a4.degree.matches);
        let a5 = chi_blambda_audit(5).unwrap();
        assert!(a5.degree_is_vertex_count);
        assert_eq!(a5.degree.observed, 15);
        assert_eq!(a5.degree.claimed, 16);
        assert!(!a5.polynomial_matches);
    }

    #[test]
    fn chromatic_numbers() {
        let b5 = blambda::build_blambda(&staircase(5).unwrap()).unwrap();
        assert_eq!(chromatic_number(&b5.to_simple()).unwrap(), 2);
        assert_eq!(chromatic_number(&SimpleGraph::empty(1)).unwrap(), 1);
        assert_eq!(chromatic_number(&SimpleGraph::complete(3)).unwrap(), 3);
        assert!(chromatic_number(&SimpleGraph::empty(0)).is_err());
    }

    #[test]
    fn cycle_rank_cap() {
        let limits = Limits {
            max_cycle_rank: 2,
            ..Limits::default()
        };
        assert!(matches!(
            chromatic_polynomial_dc_with(&SimpleGraph::ladder(3), &limits),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn separations() {
        let s = |l| colour_separation(&staircase(l).unwrap()).unwrap();
        assert_eq!((s(5).mu, s(5).kappa, s(5).balance), (9, 6, 3));
        assert_eq!((s(1).mu, s(1).kappa, s(1).balance), (1, 0, 1));
        assert_eq!((s(6).mu, s(6).kappa, s(6).balance), (12, 9, 3));
    }

    #[test]
    fn bound_rows() {
        let r = balance_bound_check(6).unwrap();
        assert_eq!(r.rows[4].balance, 3);
        assert!(r.rows[4].equality);
        assert!(r.rows[5].equality && r.rows[5].predicted_equality);
        assert_eq!((r.rows[0].balance, r.rows[0].bound), (1, 1));
        assert!(r.all_within_bound() && r.equality_as_predicted());
    }

    #[test]
    fn shared_balance() {
        for k in [1, 3, 5] {
            assert!(shared_balance_check(k).unwrap());
        }
    }
}
