//! The graph of reduced words of a permutation, with edges tagged by the
//! braid or commutation move that relates their endpoints.

use std::fmt::Write as _;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::perm::{self, Permutation, ReducedWord};
use crate::report::{Compared, Finding};
use crate::{binomial, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    /// `x y x <-> y x y` with `|x - y| = 1`.
    Braid,
    /// `x y <-> y x` with `|x - y| > 1`.
    Commutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RwEdge {
    pub a: usize,
    pub b: usize,
    pub kind: MoveKind,
}

impl Serialize for RwEdge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(3)?;
        t.serialize_element(&self.a)?;
        t.serialize_element(&self.b)?;
        t.serialize_element(&self.kind)?;
        t.end()
    }
}

/// Vertices are in lexicographic order; edges are sorted pairs `a < b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RwGraph {
    vertices: Vec<ReducedWord>,
    edges: Vec<RwEdge>,
}

/// The single local move turning `x` into `y`, if there is one. Symmetric in
/// its arguments.
pub fn detect_move(x: &[usize], y: &[usize]) -> Option<MoveKind> {
    if x.len() != y.len() {
        return None;
    }
    let first = x.iter().zip(y).position(|(a, b)| a != b)?;
    let last = x.len() - 1 - x.iter().rev().zip(y.iter().rev()).position(|(a, b)| a != b)?;
    match last - first {
        1 => {
            let (p, q) = (x[first], x[last]);
            (y[first] == q && y[last] == p && p.abs_diff(q) > 1).then_some(MoveKind::Commutation)
        }
        2 => {
            let (p, q) = (x[first], x[first + 1]);
            let is_braid = p.abs_diff(q) == 1
                && x[last] == p
                && y[first] == q
                && y[first + 1] == p
                && y[last] == q;
            is_braid.then_some(MoveKind::Braid)
        }
        _ => None,
    }
}

impl RwGraph {
    /// Builds the graph from a word list, which is sorted and deduplicated.
    /// Edges come from exhaustive pairwise move detection.
    pub fn from_words(mut vertices: Vec<ReducedWord>) -> Self {
        vertices.sort();
        vertices.dedup();
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if let Some(kind) = detect_move(vertices[i].letters(), vertices[j].letters()) {
                    edges.push(RwEdge { a: i, b: j, kind });
                }
            }
        }
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[ReducedWord] {
        &self.vertices
    }

    pub fn edges(&self) -> &[RwEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|w| w.label() == label)
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertices.len(), self.edges.iter().map(|e| (e.a, e.b)))
            .expect("edges index the vertex list")
    }

    pub fn kind_between(&self, a: usize, b: usize) -> Option<MoveKind> {
        let (a, b) = (a.min(b), a.max(b));
        self.edges
            .iter()
            .find(|e| e.a == a && e.b == b)
            .map(|e| e.kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}

pub fn build_rwgraph(w: &Permutation) -> Result<RwGraph> {
    build_rwgraph_with(w, &Limits::default())
}

pub fn build_rwgraph_with(w: &Permutation, limits: &Limits) -> Result<RwGraph> {
    let words = perm::enumerate_reduced_words_with(w, limits)?;
    if words.len() > limits.max_words {
        return Err(Error::resource("reduced-word graph order", limits.max_words));
    }
    Ok(RwGraph::from_words(words))
}

pub fn count_four_cycles(g: &RwGraph) -> usize {
    g.to_simple().four_cycle_count()
}

pub fn braid_edge_count(g: &RwGraph) -> usize {
    g.edges.iter().filter(|e| e.kind == MoveKind::Braid).count()
}

/// `v + c - e` with `c` the number of 4-cycles.
pub fn euler_like_invariant(g: &RwGraph) -> i64 {
    g.vertex_count() as i64 + count_four_cycles(g) as i64 - g.edge_count() as i64
}

/// Whether every edge on every 4-cycle is a commutation edge.
pub fn four_cycles_commutation_only(g: &RwGraph) -> bool {
    g.to_simple().four_cycles().iter().all(|c| {
        (0..4).all(|i| g.kind_between(c[i], c[(i + 1) % 4]) == Some(MoveKind::Commutation))
    })
}

/// Observed structure of the graph for the z-permutation of degree `ell + 1`,
/// set against the counts claimed for the staircase of length `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub ell: usize,
    pub permutation: String,
    pub vertices: Compared<u64>,
    pub edges: Compared<u64>,
    pub braid_edges: Compared<u64>,
    pub four_cycles: Compared<u64>,
    /// `v + c - e` observed, against the claimed constant 1.
    pub euler_like: Compared<i64>,
    /// Edge count predicted by summing `2, 4, ..., 2(ell - 1)`.
    pub edges_by_summation: u64,
    pub four_cycles_commutation_only: bool,
}

impl StructureReport {
    pub fn findings(&self) -> Vec<Finding> {
        let tag = |s: &str| format!("graph ell={} {s}", self.ell);
        vec![
            Finding::compared(tag("vertices"), &self.vertices),
            Finding::compared(tag("edges"), &self.edges),
            Finding::compared(tag("braid edges"), &self.braid_edges),
            Finding::compared(tag("4-cycles"), &self.four_cycles),
            Finding::compared(tag("v+c-e"), &self.euler_like),
        ]
    }
}

pub fn verify_structure(ell: usize) -> Result<StructureReport> {
    verify_structure_with(ell, &Limits::default())
}

pub fn verify_structure_with(ell: usize, limits: &Limits) -> Result<StructureReport> {
    if ell < 3 {
        return Err(Error::domain(format!("structure check needs ell >= 3, got {ell}")));
    }
    let sigma = perm::z_permutation(ell + 1)?;
    let g = build_rwgraph_with(&sigma, limits)?;
    let l = ell as u64;
    Ok(StructureReport {
        ell,
        permutation: sigma.to_string(),
        vertices: Compared::new(g.vertex_count() as u64, binomial(l + 1, 2)),
        edges: Compared::new(g.edge_count() as u64, l * (l + 1)),
        braid_edges: Compared::new(braid_edge_count(&g) as u64, l - 1),
        four_cycles: Compared::new(count_four_cycles(&g) as u64, binomial(l - 1, 2)),
        euler_like: Compared::new(euler_like_invariant(&g), 1),
        edges_by_summation: (1..l).map(|i| 2 * i).sum(),
        four_cycles_commutation_only: four_cycles_commutation_only(&g),
    })
}

/// Byte-deterministic DOT: braid edges bold red, commutation edges dashed.
pub fn export_dot(g: &RwGraph) -> String {
    let mut out = String::from("graph rw {\n");
    if g.vertex_count() > 0 {
        out.push_str("  node [shape=box];\n");
    }
    for w in &g.vertices {
        let _ = writeln!(out, "  \"{}\";", w.label());
    }
    for e in &g.edges {
        let style = match e.kind {
            MoveKind::Braid => "[style=bold, color=red, label=\"braid\"]",
            MoveKind::Commutation => "[style=dashed, label=\"comm\"]",
        };
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" {style};",
            g.vertices[e.a].label(),
            g.vertices[e.b].label()
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_of(s: &str) -> RwGraph {
        build_rwgraph(&Permutation::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn move_detection() {
        assert_eq!(detect_move(&[3, 2, 1, 2, 3], &[3, 1, 2, 1, 3]), Some(MoveKind::Braid));
        assert_eq!(detect_move(&[3, 1, 2, 1, 3], &[1, 3, 2, 1, 3]), Some(MoveKind::Commutation));
        // adjacent letters do not commute
        assert_eq!(detect_move(&[1, 2], &[2, 1]), None);
        // two separate commutations is not a single move
        assert_eq!(detect_move(&[3, 1, 5, 3], &[1, 3, 3, 5]), None);
        assert_eq!(detect_move(&[1, 2, 1], &[1, 2, 1]), None);
        assert_eq!(detect_move(&[1, 3, 1], &[3, 1, 3]), None);
    }

    #[test]
    fn graph_35124() {
        let g = graph_of("35124");
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn graph_4231() {
        let g = graph_of("4231");
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(braid_edge_count(&g), 2);
        assert_eq!(count_four_cycles(&g), 1);
        assert_eq!(euler_like_invariant(&g), 1);
        assert!(four_cycles_commutation_only(&g));
    }

    #[test]
    fn identity_graph() {
        let g = graph_of("123");
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert_eq!(euler_like_invariant(&g), 1);
        assert_eq!(braid_edge_count(&g), 0);
    }

    #[test]
    fn graph_25341_cycles() {
        assert_eq!(count_four_cycles(&graph_of("25341")), 3);
    }

    #[test]
    fn graph_236451() {
        let g = graph_of("236451");
        assert_eq!(braid_edge_count(&g), 4);
        assert_eq!((g.vertex_count(), count_four_cycles(&g), g.edge_count()), (15, 6, 20));
        assert_eq!(euler_like_invariant(&g), 1);
    }

    #[test]
    fn single_edge_has_no_cycles() {
        let g = RwGraph::from_words(vec![ReducedWord::new(vec![1, 3]), ReducedWord::new(vec![3, 1])]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(count_four_cycles(&g), 0);
    }

    #[test]
    fn structure_report_ell3_flags_edges() {
        let r = verify_structure(3).unwrap();
        assert!(r.vertices.matches && r.braid_edges.matches && r.four_cycles.matches);
        assert_eq!((r.edges.observed, r.edges.claimed), (6, 12));
        assert!(!r.edges.matches);
        assert_eq!(r.edges_by_summation, 6);
        assert!(r.euler_like.matches);
    }

    #[test]
    fn structure_report_rejects_small() {
        assert!(verify_structure(2).is_err());
    }

    #[test]
    fn dot_is_deterministic() {
        let g = graph_of("35124");
        let dot = export_dot(&g);
        assert_eq!(dot, export_dot(&graph_of("35124")));
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 5);
        assert!(export_dot(&graph_of("4231")).contains("\"32123\""));
        assert_eq!(export_dot(&RwGraph::default()), "graph rw {\n}\n");
    }

    #[test]
    fn json_shape() {
        let g = graph_of("4231");
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["vertices"][0], "12321");
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        assert!(v["edges"][0][2].is_string());
    }
}
