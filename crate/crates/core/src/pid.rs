//! Partition identities `x_1 + ... + x_r = y_1 + ... + y_d`, primitivity by
//! subset-sum search, the colour-separation identity, and degree-truncated
//! Graver bases of a single weight row.
//!
//! A subidentity is *proper* when both of its sides are nonempty and it is
//! not the whole identity.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::chroma;
use crate::error::{Error, Result};
use crate::partition::{self, Partition};
use crate::toric::Binomial;
use crate::Limits;

pub const PRIMITIVITY_READING: &str =
    "proper subidentity: nonempty sub-multisets on both sides with equal sums, not the whole identity";

/// Both sides stored sorted descending; equality is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionIdentity {
    lhs: Vec<u64>,
    rhs: Vec<u64>,
    #[serde(skip)]
    bound: u64,
}

impl PartitionIdentity {
    pub fn lhs(&self) -> &[u64] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[u64] {
        &self.rhs
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn total(&self) -> u64 {
        self.lhs.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    fn canonical_key(&self) -> (Reverse<Vec<u64>>, Reverse<Vec<u64>>) {
        (Reverse(self.rhs.clone()), Reverse(self.lhs.clone()))
    }
}

impl std::fmt::Display for PartitionIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[u64]| v.iter().rev().map(|x| x.to_string()).collect::<Vec<_>>().join("+");
        write!(f, "{} = {}", join(&self.lhs), join(&self.rhs))
    }
}

pub fn make_identity(lhs: &[u64], rhs: &[u64], bound: u64) -> Result<PartitionIdentity> {
    if lhs.is_empty() || rhs.is_empty() {
        return Err(Error::domain("both sides of an identity must be nonempty"));
    }
    if let Some(&p) = lhs.iter().chain(rhs).find(|&&p| p == 0 || p > bound) {
        return Err(Error::domain(format!("part {p} outside 1..={bound}")));
    }
    let (l, r): (u64, u64) = (lhs.iter().sum(), rhs.iter().sum());
    if l != r {
        return Err(Error::InvalidIdentity(format!("sides sum to {l} and {r}")));
    }
    let sorted = |s: &[u64]| {
        let mut v = s.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    Ok(PartitionIdentity {
        lhs: sorted(lhs),
        rhs: sorted(rhs),
        bound,
    })
}

/// Sub-multisets as `(sum, multiplicities)` over the distinct values of `side`.
fn sub_multisets(side: &[u64]) -> (Vec<u64>, Vec<(u64, Vec<usize>)>) {
    let mut counts: BTreeMap<Reverse<u64>, usize> = BTreeMap::new();
    for &p in side {
        *counts.entry(Reverse(p)).or_insert(0) += 1;
    }
    let values: Vec<u64> = counts.keys().map(|r| r.0).collect();
    let mults: Vec<usize> = counts.values().copied().collect();
    let mut out = vec![(0u64, vec![0usize; values.len()])];
    for (i, (&v, &m)) in values.iter().zip(&mults).enumerate() {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for (s, c) in &out {
            for k in 0..=m {
                let mut c = c.clone();
                c[i] = k;
                next.push((s + v * k as u64, c));
            }
        }
        out = next;
    }
    (values, out)
}

fn expand(values: &[u64], mult: &[usize]) -> Vec<u64> {
    values
        .iter()
        .zip(mult)
        .flat_map(|(&v, &k)| std::iter::repeat_n(v, k))
        .collect()
}

fn check_size(id: &PartitionIdentity, limits: &Limits) -> Result<()> {
    if id.part_count() > limits.max_identity_parts {
        return Err(Error::resource("identity part count", limits.max_identity_parts));
    }
    Ok(())
}

fn proper_subidentities(id: &PartitionIdentity, first_only: bool) -> Vec<PartitionIdentity> {
    let (lv, ls) = sub_multisets(&id.lhs);
    let (rv, rs) = sub_multisets(&id.rhs);
    let mut by_sum: BTreeMap<u64, Vec<&Vec<usize>>> = BTreeMap::new();
    for (s, c) in &rs {
        if *s > 0 {
            by_sum.entry(*s).or_default().push(c);
        }
    }
    let total = id.total();
    let mut out = Vec::new();
    for (s, lc) in &ls {
        if *s == 0 {
            continue;
        }
        for rc in by_sum.get(s).into_iter().flatten() {
            if *s == total && lc.iter().sum::<usize>() == id.lhs.len() && rc.iter().sum::<usize>() == id.rhs.len() {
                continue;
            }
            out.push(PartitionIdentity {
                lhs: expand(&lv, lc),
                rhs: expand(&rv, rc),
                bound: id.bound,
            });
            if first_only {
                return out;
            }
        }
    }
    out
}

pub fn is_primitive(id: &PartitionIdentity) -> Result<bool> {
    is_primitive_with(id, &Limits::default())
}

pub fn is_primitive_with(id: &PartitionIdentity, limits: &Limits) -> Result<bool> {
    check_size(id, limits)?;
    Ok(proper_subidentities(id, true).is_empty())
}

/// Every proper subidentity that is itself primitive, sorted by right side
/// then left side, both descending.
pub fn primitive_subidentities(id: &PartitionIdentity) -> Result<Vec<PartitionIdentity>> {
    primitive_subidentities_with(id, &Limits::default())
}

pub fn primitive_subidentities_with(id: &PartitionIdentity, limits: &Limits) -> Result<Vec<PartitionIdentity>> {
    check_size(id, limits)?;
    let mut out: Vec<PartitionIdentity> = proper_subidentities(id, false)
        .into_iter()
        .filter(|s| proper_subidentities(s, true).is_empty())
        .collect();
    out.sort_by_key(|s| s.canonical_key());
    out.dedup();
    Ok(out)
}

/// `1 + 2 + ... + ell = |mu| + |kappa|`.
pub fn cspi(lambda: &Partition) -> Result<PartitionIdentity> {
    let ell = partition::require_staircase(lambda)?;
    if ell < 5 {
        return Err(Error::domain(format!("cspi needs ell >= 5, got {ell}")));
    }
    let sep = chroma::colour_separation(lambda)?;
    let lhs: Vec<u64> = (1..=ell as u64).collect();
    let rhs = [sep.mu as u64, sep.kappa as u64];
    make_identity(&lhs, &rhs, (sep.mu as u64).max(ell as u64))
}

/// The odd-parts and even-parts splits, each equal to one colour class.
pub fn parity_splits(lambda: &Partition) -> Result<Vec<PartitionIdentity>> {
    let ell = partition::require_staircase(lambda)?;
    let id = cspi(lambda)?;
    let mut out = Vec::new();
    for parity in [1, 0] {
        let class: Vec<u64> = (1..=ell as u64).filter(|i| i % 2 == parity).collect();
        let sum: u64 = class.iter().sum();
        out.push(make_identity(&class, &[sum], id.bound)?);
    }
    out.sort_by_key(|s| s.canonical_key());
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspiReport {
    pub ell: usize,
    pub reading: String,
    pub identity: PartitionIdentity,
    pub all_parts_distinct: bool,
    pub primitive: bool,
    pub primitive_subidentities: Vec<PartitionIdentity>,
    pub parity_splits: Vec<PartitionIdentity>,
    /// Both parity splits occur among the primitive subidentities.
    pub contains_parity_splits: bool,
    /// The primitive subidentities are exactly the two parity splits.
    pub exactly_parity_splits: bool,
}

pub fn cspi_report(lambda: &Partition) -> Result<CspiReport> {
    let identity = cspi(lambda)?;
    let mut parts: Vec<u64> = identity.lhs.iter().chain(&identity.rhs).copied().collect();
    parts.sort_unstable();
    let all_parts_distinct = parts.windows(2).all(|w| w[0] != w[1]);
    let subs = primitive_subidentities(&identity)?;
    let splits = parity_splits(lambda)?;
    Ok(CspiReport {
        ell: lambda.length(),
        reading: PRIMITIVITY_READING.into(),
        all_parts_distinct,
        primitive: is_primitive(&identity)?,
        contains_parity_splits: splits.iter().all(|s| subs.contains(s)),
        exactly_parity_splits: subs == splits,
        primitive_subidentities: subs,
        parity_splits: splits,
        identity,
    })
}

/// Degree-truncated Graver basis of the row `weights`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graver {
    weights: Vec<u64>,
    degree_bound: u32,
    elements: Vec<Binomial>,
    complete: bool,
}

#[derive(Serialize)]
struct GraverElement<'a> {
    u: &'a [u32],
    v: &'a [u32],
    weights: &'a [u64],
}

impl Graver {
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// False when the state cap cut the enumeration short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Variables named by weight, `x{w}`.
    pub fn names(&self) -> Vec<String> {
        self.weights.iter().map(|w| format!("x{w}")).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        let names = self.names();
        self.elements.iter().map(|b| b.display_with(&names)).collect()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<GraverElement> = self
            .elements
            .iter()
            .map(|b| GraverElement {
                u: b.u(),
                v: b.v(),
                weights: &self.weights,
            })
            .collect();
        serde_json::to_string(&rows).expect("graver serializes")
    }
}

pub fn graver_1xn(weights: &[u64], degree_bound: u32) -> Result<Graver> {
    graver_1xn_with(weights, degree_bound, &Limits::default())
}

/// Errors when the state cap is reached; see [`graver_1xn_partial`].
pub fn graver_1xn_with(weights: &[u64], degree_bound: u32, limits: &Limits) -> Result<Graver> {
    let g = graver_1xn_partial(weights, degree_bound, limits)?;
    if !g.complete {
        return Err(Error::resource(
            format!("Graver enumeration ({} elements found before stopping)", g.elements.len()),
            limits.max_graver_states,
        ));
    }
    Ok(g)
}

/// Lists every monomial of degree `1..=degree_bound`, pairs those of equal
/// weight with disjoint supports, and keeps the primitive pairs. Stops early,
/// flagging the result incomplete, once `max_graver_states` monomials are listed.
pub fn graver_1xn_partial(weights: &[u64], degree_bound: u32, limits: &Limits) -> Result<Graver> {
    if weights.is_empty() || degree_bound == 0 {
        return Err(Error::domain("Graver enumeration needs weights and a positive degree bound"));
    }
    if weights.contains(&0) {
        return Err(Error::domain("weights must be positive"));
    }
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("weights must be distinct"));
    }
    let mut complete = true;
    let monos = monomials_upto(weights.len(), degree_bound, limits.max_graver_states, &mut complete);
    let mut by_weight: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
    for mono in monos {
        let w = mono.iter().zip(weights).map(|(&k, &w)| k as u64 * w).sum();
        by_weight.entry(w).or_default().push(mono);
    }

    let mut elements = Vec::new();
    for group in by_weight.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                if !a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0) {
                    continue;
                }
                let (u, v) = if a > b { (a, b) } else { (b, a) };
                if is_primitive_pair(u, v, weights) {
                    elements.push(Binomial::new(u.clone(), v.clone())?);
                }
            }
        }
    }
    elements.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.u().cmp(a.u()))
            .then_with(|| b.v().cmp(a.v()))
    });
    Ok(Graver {
        weights: weights.to_vec(),
        degree_bound,
        elements,
        complete,
    })
}

/// Exponent vectors of total degree `1..=d`, at most `cap` of them.
fn monomials_upto(n: usize, d: u32, cap: usize, complete: &mut bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut [u32], out: &mut Vec<Vec<u32>>, cap: usize, complete: &mut bool) {
        if !*complete {
            return;
        }
        if i == cur.len() {
            if cur.iter().any(|&e| e > 0) {
                if out.len() == cap {
                    *complete = false;
                    return;
                }
                out.push(cur.to_vec());
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out, cap, complete);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out, cap, complete);
    out
}

/// A pair is primitive iff the partition identity of its weights is.
fn is_primitive_pair(u: &[u32], v: &[u32], weights: &[u64]) -> bool {
    let side = |m: &[u32]| -> Vec<u64> {
        m.iter()
            .zip(weights)
            .flat_map(|(&k, &w)| std::iter::repeat_n(w, k as usize))
            .collect()
    };
    let (l, r) = (side(u), side(v));
    let bound = l.iter().chain(&r).copied().max().unwrap_or(1);
    let id = make_identity(&l, &r, bound).expect("equal weights");
    proper_subidentities(&id, true).is_empty()
}
