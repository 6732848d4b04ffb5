//! The layered graph `B_lambda` of a staircase: Ferrers cells grouped by
//! diagonal, joined when they share a side.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::partition::{self, FerrersCell, GfReport, GfRow, Partition};
use crate::poly::IntPolynomial;
use crate::report::Compared;
use crate::rwgraph::RwGraph;
use crate::Limits;

/// `(layer, index)` with layers 1-based and the index counting cells of the
/// diagonal by column `b` ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId {
    pub layer: usize,
    pub index: usize,
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}_{}", self.layer, self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredGraph {
    ell: usize,
    layers: Vec<Vec<VertexId>>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl LayeredGraph {
    pub fn layers(&self) -> &[Vec<VertexId>] {
        &self.layers
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of a vertex in layer-major order.
    pub fn flat_index(&self, v: VertexId) -> usize {
        self.layers[..v.layer - 1].iter().map(Vec::len).sum::<usize>() + v.index
    }

    pub fn length(&self) -> usize {
        self.ell
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(
            self.vertex_count(),
            self.edges
                .iter()
                .map(|&(u, v)| (self.flat_index(u), self.flat_index(v))),
        )
        .expect("layered edges index their own vertices")
    }

    /// Edges join consecutive layers only and layers have sizes `ell + 1 - i`.
    pub fn is_pseudo_multipartite(&self) -> bool {
        let ell = self.layers.len();
        let sizes_ok = self
            .layers
            .iter()
            .enumerate()
            .all(|(i, layer)| layer.len() == ell - i);
        sizes_ok && self.edges.iter().all(|(u, v)| u.layer.abs_diff(v.layer) == 1)
    }

    /// `{"layers": [[id]], "edges": [[id, id]]}` with layer-major integer ids.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire {
            layers: Vec<Vec<usize>>,
            edges: Vec<[usize; 2]>,
        }
        let wire = Wire {
            layers: self
                .layers
                .iter()
                .map(|l| l.iter().map(|&v| self.flat_index(v)).collect())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [self.flat_index(u), self.flat_index(v)])
                .collect(),
        };
        serde_json::to_string(&wire).expect("layered graph serializes")
    }

    /// One `rank=same` cluster per layer; deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph blambda {\n");
        for (i, layer) in self.layers.iter().enumerate() {
            let names: Vec<String> = layer.iter().map(|v| format!("\"{v}\"")).collect();
            let _ = writeln!(out, "  {{ rank=same; /* V{} */ {}; }}", i + 1, names.join("; "));
        }
        for (u, v) in &self.edges {
            let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_blambda(lambda: &Partition) -> Result<LayeredGraph> {
    let ell = partition::require_staircase(lambda)?;
    let layers: Vec<Vec<VertexId>> = (1..=ell)
        .map(|layer| {
            (0..=ell - layer)
                .map(|index| VertexId { layer, index })
                .collect()
        })
        .collect();
    let mut edges = BTreeSet::new();
    for &v in layers.iter().flatten() {
        let c = cell_of(v, ell);
        for nb in [FerrersCell::new(c.a + 1, c.b), FerrersCell::new(c.a, c.b + 1)] {
            if lambda.contains(nb) {
                let w = id_of(nb, ell);
                edges.insert((v.min(w), v.max(w)));
            }
        }
    }
    Ok(LayeredGraph { ell, layers, edges })
}

/// Layer `V_i` holds the anti-diagonal `a + b = ell - i`, which has
/// `ell + 1 - i` cells; the index within the layer is the column `b`.
pub fn cell_of(v: VertexId, ell: usize) -> FerrersCell {
    let d = ell - v.layer;
    FerrersCell::new(d - v.index, v.index)
}

pub fn id_of(c: FerrersCell, ell: usize) -> VertexId {
    VertexId {
        layer: ell - c.diagonal(),
        index: c.b,
    }
}

/// Backtracking isomorphism test between the underlying simple graphs.
pub fn iso_check(g: &RwGraph, b: &LayeredGraph) -> Result<bool> {
    iso_check_with(g, b, &Limits::default())
}

pub fn iso_check_with(g: &RwGraph, b: &LayeredGraph, limits: &Limits) -> Result<bool> {
    Ok(find_isomorphism(&g.to_simple(), &b.to_simple(), limits.max_iso_vertices)?.is_some())
}

/// A vertex bijection `map` with `{u, v}` an edge of `g1` iff `{map[u], map[v]}`
/// is an edge of `g2`, if one exists.
pub fn find_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    if n > cap || g2.vertex_count() > cap {
        return Err(Error::resource("isomorphism search vertex count", cap));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (d1, d2) = (g1.degrees(), g2.degrees());
    let (mut s1, mut s2) = (d1.clone(), d2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let adj1 = g1.adjacency();
    let adj2 = g2.adjacency();
    // neighbourhood degree multisets refine the degree test
    let signature = |adj: &Vec<Vec<usize>>, deg: &Vec<usize>, v: usize| {
        let mut s: Vec<usize> = adj[v].iter().map(|&u| deg[u]).collect();
        s.sort_unstable();
        (deg[v], s)
    };
    let sig1: Vec<_> = (0..n).map(|v| signature(&adj1, &d1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| signature(&adj2, &d2, v)).collect();

    // visit g1 in BFS order so each new vertex has mapped neighbours
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (d1[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &adj1[v] {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(0, &order, g1, g2, &sig1, &sig2, &mut map, &mut used);
    Ok(found.then_some(map))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    sig1: &[(usize, Vec<usize>)],
    sig2: &[(usize, Vec<usize>)],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..map.len() {
        if used[w] || sig1[v] != sig2[w] {
            continue;
        }
        // every already-mapped vertex must agree on adjacency with v
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(depth + 1, order, g1, g2, sig1, sig2, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// `P_ell(e) = sum_{k=1..ell} (ell + 1 - k) e^(ell - k)`.
pub fn edge_missing_polynomial(ell: usize) -> Result<IntPolynomial> {
    if ell == 0 {
        return Err(Error::domain("edge-missing polynomial needs ell >= 1"));
    }
    let mut coeffs = vec![0i64; ell];
    for k in 1..=ell {
        coeffs[ell - k] = (ell + 1 - k) as i64;
    }
    Ok(IntPolynomial::from_i64(&coeffs))
}

/// Compares the truncation (`z`-degree at most `nz`, `e`-degree at most `ne`)
/// of `z / ((1 - e)(1 - e z)^2)` with `sum_{ell >= 2} P_ell(e) z^ell`.
pub fn family_gf_check(nz: usize, ne: usize) -> Result<GfReport> {
    // (1 - e)(1 - e z)^2 indexed [z][e]
    let den: &[(usize, usize, i64)] = &[
        (0, 0, 1),
        (0, 1, -1),
        (1, 1, -2),
        (1, 2, 2),
        (2, 2, 1),
        (2, 3, -1),
    ];
    let mut series = vec![vec![0i64; ne + 1]; nz + 1];
    for i in 0..=nz {
        for j in 0..=ne {
            let mut c = if (i, j) == (1, 0) { 1 } else { 0 };
            for &(p, q, d) in &den[1..] {
                if p <= i && q <= j {
                    c -= d * series[i - p][j - q];
                }
            }
            series[i][j] = c;
        }
    }
    let mut rows = Vec::new();
    for (i, row) in series.iter().enumerate() {
        let term = if i >= 2 {
            Some(edge_missing_polynomial(i)?)
        } else {
            None
        };
        for (j, &c) in row.iter().enumerate() {
            let t = term
                .as_ref()
                .map(|p| i64::try_from(p.coeff(j)).expect("small coefficient"))
                .unwrap_or(0);
            rows.push(GfRow {
                z_degree: i,
                e_degree: Some(j),
                closed_form: c,
                term_sum: t,
                matches: c == t,
                degenerate: i < 2,
            });
        }
    }
    Ok(GfReport {
        description: format!(
            "z/((1-e)(1-ez)^2) vs sum_(ell>=2) P_ell(e) z^ell, z-degree <= {nz}, e-degree <= {ne}"
        ),
        rows,
    })
}

/// Strict containment of staircase shapes, checked on the graphs: every cell
/// and every edge of `B_{lambda1}` appears in `B_{lambda2}`.
pub fn is_subgraph_order(lambda1: &Partition, lambda2: &Partition) -> Result<bool> {
    let l1 = partition::require_staircase(lambda1)?;
    let l2 = partition::require_staircase(lambda2)?;
    let cells1: BTreeSet<FerrersCell> = lambda1.cells().into_iter().collect();
    let cells2: BTreeSet<FerrersCell> = lambda2.cells().into_iter().collect();
    let edges = |lambda: &Partition, ell: usize| -> Result<BTreeSet<(FerrersCell, FerrersCell)>> {
        Ok(build_blambda(lambda)?
            .edges()
            .map(|(u, v)| (cell_of(u, ell), cell_of(v, ell)))
            .map(|(c, d)| (c.min(d), c.max(d)))
            .collect())
    };
    let structural = cells1.is_subset(&cells2)
        && cells1 != cells2
        && edges(lambda1, l1)?.is_subset(&edges(lambda2, l2)?);
    debug_assert_eq!(structural, l1 < l2);
    Ok(structural && l1 < l2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub first_length: usize,
    /// `|lambda1|` and `|lambda2|` have the same parity.
    pub same_vertex_parity: bool,
    pub first_length_odd: bool,
    /// The distinct-odd-parts partitions have equal length.
    pub same_odd_parts_length: bool,
    pub all_agree: bool,
}

pub fn is_parity_pair(lambda1: &Partition, lambda2: &Partition) -> Result<ParityReport> {
    let l1 = partition::require_staircase(lambda1)?;
    let l2 = partition::require_staircase(lambda2)?;
    if l2 != l1 + 1 {
        return Err(Error::domain(format!(
            "staircases of lengths {l1} and {l2} are not consecutive"
        )));
    }
    let same_vertex_parity = lambda1.size() % 2 == lambda2.size() % 2;
    let first_length_odd = l1 % 2 == 1;
    let same_odd_parts_length = partition::distinct_odd_parts(lambda1)?.length()
        == partition::distinct_odd_parts(lambda2)?.length();
    Ok(ParityReport {
        first_length: l1,
        same_vertex_parity,
        first_length_odd,
        same_odd_parts_length,
        all_agree: same_vertex_parity == first_length_odd
            && first_length_odd == same_odd_parts_length,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    EvenVertices,
    OddVertices,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::EvenVertices => "even vertices",
            ParityClass::OddVertices => "odd vertices",
        })
    }
}

impl ParityClass {
    fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            ParityClass::EvenVertices
        } else {
            ParityClass::OddVertices
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityClassReport {
    pub length: usize,
    /// Vertex counts of the pair `(B_{lambda1}, B_{lambda2})`.
    pub pair_sizes: (usize, usize),
    /// Observed class of `|lambda1|` against the class predicted from `ell mod 4`.
    pub class: Compared<ParityClass>,
}

/// Even vertices predicted when `ell = 1 (mod 4)`, odd when `ell = 3 (mod 4)`,
/// reported against the actual parity of `|lambda1|`.
pub fn vertex_parity_mod4(lambda1: &Partition) -> Result<ParityClassReport> {
    let ell = partition::require_staircase(lambda1)?;
    if ell % 2 == 0 {
        return Err(Error::domain(format!("length {ell} is even; the pair is not a parity pair")));
    }
    let claimed = if ell % 4 == 1 {
        ParityClass::EvenVertices
    } else {
        ParityClass::OddVertices
    };
    let size1 = lambda1.size();
    let size2 = partition::triangular(ell + 1);
    Ok(ParityClassReport {
        length: ell,
        pair_sizes: (size1, size2),
        class: Compared::new(ParityClass::of(size1), claimed),
    })
}

/// `[[k^2, k^2 + k], [k^2 - k, k^2]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParityMatrix {
    pub k: u64,
    pub entries: [[i128; 2]; 2],
}

impl ParityMatrix {
    pub fn determinant(&self) -> i128 {
        let [[a, b], [c, d]] = self.entries;
        a * d - b * c
    }

    pub fn column_sums(&self) -> (i128, i128) {
        let [[a, b], [c, d]] = self.entries;
        (a + c, b + d)
    }
}

pub fn parity_matrix(k: u64) -> Result<ParityMatrix> {
    if k == 0 {
        return Err(Error::domain("parity matrix needs k >= 1"));
    }
    let k2 = (k as i128) * (k as i128);
    let ki = k as i128;
    Ok(ParityMatrix {
        k,
        entries: [[k2, k2 + ki], [k2 - ki, k2]],
    })
}
