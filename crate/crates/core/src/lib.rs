//! Reduced-word graphs of the staircase family, exact chromatic polynomials and
//! 2-colour separations of their layered models, partition identities, and a
//! small binomial Gröbner/Hilbert engine used to audit the associated ideals.
//!
//! Every computation is exact. Checks of published claims are returned as
//! reports with observed and claimed values side by side; see [`report`].

pub mod blambda;
pub mod chroma;
pub mod cli;
pub mod error;
pub mod graph;
pub mod partition;
pub mod perm;
pub mod pid;
pub mod poly;
pub mod report;
pub mod rwgraph;
pub mod toric;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use poly::IntPolynomial;

use serde::{Deserialize, Serialize};

/// Resource bounds shared by the enumerations and searches in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest permutation degree accepted by reduced-word enumeration.
    pub max_degree: usize,
    /// Largest reduced-word set (and so graph order) built.
    pub max_words: usize,
    /// Vertex cap for the isomorphism search.
    pub max_iso_vertices: usize,
    /// Cycle-rank cap for deletion–contraction.
    pub max_cycle_rank: usize,
    /// Basis-size guard for the Gröbner engine.
    pub max_basis: usize,
    /// Variable and generator caps for Hilbert series.
    pub max_hilbert_vars: usize,
    pub max_hilbert_gens: usize,
    /// Total part count accepted by subset-sum primitivity checks.
    pub max_identity_parts: usize,
    /// Monomial count guard for the truncated Graver enumeration.
    pub max_graver_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_degree: 12,
            max_words: 200_000,
            max_iso_vertices: 28,
            max_cycle_rank: 24,
            max_basis: 5_000,
            max_hilbert_vars: 16,
            max_hilbert_gens: 64,
            max_identity_parts: 20,
            max_graver_states: 2_000_000,
        }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    #[test]
    fn binomial_small() {
        assert_eq!(super::binomial(4, 2), 6);
        assert_eq!(super::binomial(2, 3), 0);
        assert_eq!(super::binomial(0, 0), 1);
        assert_eq!(super::binomial(10, 5), 252);
    }
}
