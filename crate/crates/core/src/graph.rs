//! Small undirected simple graphs on `0..n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Inserts `{a, b}`; returns whether it was new.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        if a == b {
            return Err(Error::domain(format!("self-loop at {a}")));
        }
        if a >= self.n || b >= self.n {
            return Err(Error::domain(format!("edge ({a},{b}) outside 0..{}", self.n)));
        }
        Ok(self.edges.insert((a.min(b), a.max(b))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        comps
    }

    /// `e - v + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.n
    }

    /// A proper 2-colouring if one exists.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(0);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &u in &adj[v] {
                    match colour[u] {
                        None => {
                            colour[u] = Some(1 - c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Number of distinct 4-vertex subsets that carry a 4-cycle.
    pub fn four_cycle_count(&self) -> usize {
        let subsets: BTreeSet<[usize; 4]> = self
            .four_cycles()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        subsets.len()
    }

    /// All 4-cycles as `[a, b, c, d]` in cyclic order, `a` smallest and `b < d`.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.n {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > a && c != b) {
                    for &d in adj[c].iter().filter(|&&d| d > b && d != c) {
                        if self.has_edge(d, a) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b).expect("valid");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Ladder of `d` squares glued along rungs: vertices `2i`, `2i+1` for
    /// `i in 0..=d`, rails and rungs as edges. Has `2d + 2` vertices.
    pub fn ladder(d: usize) -> Self {
        let mut g = Self::empty(2 * d + 2);
        for i in 0..=d {
            g.add_edge(2 * i, 2 * i + 1).expect("rung");
            if i < d {
                g.add_edge(2 * i, 2 * i + 2).expect("rail");
                g.add_edge(2 * i + 1, 2 * i + 3).expect("rail");
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = SimpleGraph::empty(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn four_cycles_small() {
        assert_eq!(SimpleGraph::cycle(4).four_cycle_count(), 1);
        assert_eq!(SimpleGraph::path(2).four_cycle_count(), 0);
        assert_eq!(SimpleGraph::complete(4).four_cycles().len(), 3);
        assert_eq!(SimpleGraph::complete(4).four_cycle_count(), 1);
        // two squares sharing a rung: two faces, and no outer 4-cycle
        assert_eq!(SimpleGraph::ladder(2).four_cycle_count(), 2);
    }

    #[test]
    fn bipartite() {
        assert!(SimpleGraph::cycle(6).is_bipartite());
        assert!(!SimpleGraph::cycle(5).is_bipartite());
        assert!(SimpleGraph::empty(1).is_bipartite());
    }

    #[test]
    fn cycle_rank() {
        assert_eq!(SimpleGraph::ladder(3).cycle_rank(), 3);
        assert_eq!(SimpleGraph::path(5).cycle_rank(), 0);
        assert_eq!(SimpleGraph::complete(4).cycle_rank(), 3);
    }
}
