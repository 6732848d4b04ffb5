use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use proptest::prelude::*;
use stairgraph::partition::{self, Partition};
use stairgraph::perm::{self, Permutation};
use stairgraph::toric::{self, Binomial, MonomialIdeal, MonomialOrder};
use stairgraph::{blambda, chroma, pid, SimpleGraph};

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 1..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn permutation_strategy() -> impl Strategy<Value = Permutation> {
    (2usize..7)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn graph_strategy() -> impl Strategy<Value = SimpleGraph> {
    (1usize..8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    })
}

/// Proper colourings with `k` colours, by trying every assignment.
fn count_colourings(g: &SimpleGraph, k: usize) -> u64 {
    let n = g.vertex_count();
    if k == 0 {
        return u64::from(n == 0);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colour = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(a, b)| colour[a] != colour[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
    }
}

/// All words reachable from one reduced word by braid and commutation moves.
fn words_by_moves(start: Vec<usize>) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let mut next = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            if w[i].abs_diff(w[i + 1]) > 1 {
                let mut x = w.clone();
                x.swap(i, i + 1);
                next.push(x);
            }
            if i + 2 < w.len() && w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1 {
                let mut x = w.clone();
                x[i] = w[i + 1];
                x[i + 1] = w[i];
                x[i + 2] = w[i + 1];
                next.push(x);
            }
        }
        for x in next {
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    seen
}

fn monomials(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monomials(n - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Primitive kernel pairs of degree at most `d`, as unordered pairs.
fn graver_oracle(w: &[u64], d: u32) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let n = w.len();
    let all: Vec<Vec<u32>> = (1..=d).flat_map(|k| monomials(n, k)).collect();
    let wt = |m: &[u32]| m.iter().zip(w).map(|(&e, &x)| e as u64 * x).sum::<u64>();
    let pairs: Vec<(Vec<u32>, Vec<u32>)> = all
        .iter()
        .flat_map(|u| all.iter().map(move |v| (u.clone(), v.clone())))
        .filter(|(u, v)| u < v && wt(u) == wt(v) && u.iter().zip(v).all(|(a, b)| a.min(b) == &0))
        .collect();
    let le = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    pairs
        .iter()
        .filter(|(u, v)| {
            !pairs.iter().any(|(p, q)| {
                (p, q) != (u, v)
                    && ((le(p, u) && le(q, v)) || (le(q, u) && le(p, v)))
            })
        })
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transpose_is_an_involution(p in partition_strategy()) {
        let t = partition::transpose(&p);
        prop_assert_eq!(t.size(), p.size());
        prop_assert_eq!(partition::transpose(&t), p);
    }

    #[test]
    fn triangular_numbers_invert(n in 0usize..5000) {
        prop_assert_eq!(partition::is_triangular(partition::triangular(n)), Some(n));
        if n > 1 {
            prop_assert_eq!(partition::is_triangular(partition::triangular(n) + 1), None);
        }
    }

    #[test]
    fn reduced_words_form_one_move_class(w in permutation_strategy()) {
        let words = perm::enumerate_reduced_words(&w).unwrap();
        prop_assert!(!words.is_empty());
        for word in &words {
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(&perm::apply_word(word.letters(), w.degree()).unwrap(), &w);
        }
        let ours: BTreeSet<Vec<usize>> = words.iter().map(|x| x.letters().to_vec()).collect();
        prop_assert_eq!(ours, words_by_moves(words[0].letters().to_vec()));
    }

    #[test]
    fn chromatic_polynomial_counts_colourings(g in graph_strategy()) {
        let p = chroma::chromatic_polynomial_dc(&g).unwrap();
        prop_assert_eq!(p.degree(), Some(g.vertex_count()));
        prop_assert_eq!(p.eval_i64(0), BigInt::from(0));
        for k in 0..=4 {
            prop_assert_eq!(p.eval_i64(k as i64), BigInt::from(count_colourings(&g, k)));
        }
        if g.edge_count() > 0 {
            prop_assert_eq!(p.eval_i64(1), BigInt::from(0));
        }
    }

    #[test]
    fn hilbert_series_counts_standard_monomials(
        n in 1usize..5,
        raw in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..5),
    ) {
        let gens: Vec<Vec<u32>> = raw.into_iter().map(|g| g[..n].to_vec()).collect();
        let mi = MonomialIdeal::new(n, gens).unwrap();
        let h = toric::hilbert(&mi).unwrap();
        let series: Vec<BigInt> = h.series(8);
        let counts = toric::standard_monomial_counts(&mi, 8);
        for (s, c) in series.iter().zip(&counts) {
            prop_assert_eq!(s, &BigInt::from(*c));
        }
    }

    #[test]
    fn graver_matches_exhaustive_search(w in prop::collection::btree_set(1u64..7, 2..4), d in 1u32..4) {
        let w: Vec<u64> = w.into_iter().collect();
        let g = pid::graver_1xn(&w, d).unwrap();
        let ours: BTreeSet<(Vec<u32>, Vec<u32>)> = g
            .elements()
            .iter()
            .map(|b| {
                let (u, v) = (b.u().to_vec(), b.v().to_vec());
                if u < v { (u, v) } else { (v, u) }
            })
            .collect();
        prop_assert_eq!(ours, graver_oracle(&w, d));
    }

    #[test]
    fn groebner_elements_stay_in_kernel(w in prop::collection::btree_set(1u64..6, 3..5)) {
        let w: Vec<u64> = w.into_iter().collect();
        let n = w.len();
        let gens: Vec<Binomial> = graver_oracle(&w, 2)
            .into_iter()
            .map(|(u, v)| Binomial::new(u, v).unwrap())
            .collect();
        prop_assume!(!gens.is_empty());
        let run = toric::buchberger_binomial_with(&gens, MonomialOrder::Grevlex, &stairgraph::Limits::default(), true).unwrap();
        let certs = run.certificates.as_ref().unwrap();
        for (b, c) in run.basis.iter().zip(certs) {
            prop_assert!(toric::in_kernel(b, &w).unwrap());
            prop_assert!(c.proves(&gens, b));
        }
        prop_assert!(toric::all_s_pairs_reduce(&run.basis, MonomialOrder::Grevlex));
        for g in &gens {
            prop_assert!(toric::normal_form(g, &run.basis, MonomialOrder::Grevlex).is_none());
        }
        let ini = toric::initial_ideal(&run.basis, MonomialOrder::Grevlex, n).unwrap();
        prop_assert!(toric::hilbert(&ini).is_ok());
    }

    #[test]
    fn parity_matrix_determinant(k in 1u64..1_000_000) {
        let m = blambda::parity_matrix(k).unwrap();
        let kk = k as i128;
        prop_assert_eq!(m.determinant(), kk * kk);
        prop_assert_eq!(m.column_sums(), (2 * kk * kk - kk, 2 * kk * kk + kk));
    }

    #[test]
    fn staircase_graphs_have_vertex_degree_chromatic_polynomials(ell in 1usize..7) {
        let g = blambda::build_blambda(&partition::staircase(ell).unwrap()).unwrap().to_simple();
        let p = chroma::chromatic_polynomial_dc(&g).unwrap();
        prop_assert_eq!(p.degree(), Some(g.vertex_count()));
        prop_assert_eq!(g.edge_count(), ell * (ell - 1));
    }
}
