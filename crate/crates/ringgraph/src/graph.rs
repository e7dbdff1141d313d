//! Loop-graph algebra: complete graphs with loops, disjoint union, join and
//! tensor product, realization of symbolic structure expressions, shape
//! recognition for the join-of-cliques family, and isomorphism testing.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is not in the clique family: {0}")]
    NotInFamily(String),
    #[error("isomorphism undecided: neither the family decomposition nor the small-graph fallback applies")]
    Undecided,
}

/// Undirected simple graph where vertices may carry loops. Adjacency is kept
/// as bitset rows; the diagonal bit is the loop.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopGraph {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for LoopGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LoopGraph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("loops", &self.loop_vertices().len())
            .finish()
    }
}

impl LoopGraph {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        LoopGraph { n, words_per_row, rows: vec![0u64; n * words_per_row] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words_per_row + (j >> 6)] & (1u64 << (j & 63)) != 0
    }

    #[inline]
    fn set_bit(&mut self, i: usize, j: usize) {
        self.rows[i * self.words_per_row + (j >> 6)] |= 1u64 << (j & 63);
    }

    /// Add an undirected edge; i == j adds a loop.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.set_bit(i, j);
        self.set_bit(j, i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bit(i, j)
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.bit(i, i)
    }

    /// Neighbor count, not counting the loop.
    pub fn degree(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| j != i && self.bit(i, j)).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Non-loop edges, each listed once with endpoints ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| ((i + 1)..self.n).filter(move |&j| self.bit(i, j)).map(move |j| (i, j)))
    }

    pub fn loop_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_loop(i)).collect()
    }

    /// K_n with all loops.
    pub fn complete_with_loops(n: usize) -> Self {
        let mut g = LoopGraph::new(n);
        for i in 0..n {
            for j in i..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// K_n without loops.
    pub fn complete(n: usize) -> Self {
        let mut g = LoopGraph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Vertices of `self` followed by vertices of `other`, no cross edges.
    pub fn disjoint_union(&self, other: &LoopGraph) -> LoopGraph {
        let mut g = LoopGraph::new(self.n + other.n);
        for i in 0..self.n {
            for j in i..self.n {
                if self.bit(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        for i in 0..other.n {
            for j in i..other.n {
                if other.bit(i, j) {
                    g.add_edge(self.n + i, self.n + j);
                }
            }
        }
        g
    }

    /// Disjoint union plus all cross edges.
    pub fn join(&self, other: &LoopGraph) -> LoopGraph {
        let mut g = self.disjoint_union(other);
        for i in 0..self.n {
            for j in 0..other.n {
                g.add_edge(i, self.n + j);
            }
        }
        g
    }

    /// Tensor product: vertices are pairs, adjacency is the conjunction.
    /// A pair has a loop exactly when both components do.
    pub fn tensor_product(&self, other: &LoopGraph) -> LoopGraph {
        let m = other.n;
        let mut g = LoopGraph::new(self.n * m);
        for g1 in 0..self.n {
            for h1 in 0..m {
                let v = g1 * m + h1;
                for g2 in g1..self.n {
                    for h2 in 0..m {
                        let w = g2 * m + h2;
                        if w < v {
                            continue;
                        }
                        if self.bit(g1, g2) && other.bit(h1, h2) {
                            g.add_edge(v, w);
                        }
                    }
                }
            }
        }
        g
    }
}

/// Symbolic graph expression over loop-cliques, unions with multiplicity,
/// joins and tensor products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralExpr {
    Kcirc(u64),
    Union(Vec<(StructuralExpr, u64)>),
    Join(Box<StructuralExpr>, Box<StructuralExpr>),
    Tensor(Box<StructuralExpr>, Box<StructuralExpr>),
}

impl StructuralExpr {
    pub fn join(a: StructuralExpr, b: StructuralExpr) -> StructuralExpr {
        StructuralExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: StructuralExpr, b: StructuralExpr) -> StructuralExpr {
        StructuralExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn vertex_count(&self) -> u64 {
        match self {
            StructuralExpr::Kcirc(n) => *n,
            StructuralExpr::Union(terms) => terms.iter().map(|(e, t)| e.vertex_count() * t).sum(),
            StructuralExpr::Join(a, b) => a.vertex_count() + b.vertex_count(),
            StructuralExpr::Tensor(a, b) => a.vertex_count() * b.vertex_count(),
        }
    }

    /// Evaluate the expression tree with deterministic left-to-right,
    /// depth-first vertex ordering.
    pub fn realize(&self) -> LoopGraph {
        match self {
            StructuralExpr::Kcirc(n) => LoopGraph::complete_with_loops(*n as usize),
            StructuralExpr::Union(terms) => {
                let mut acc = LoopGraph::new(0);
                for (expr, times) in terms {
                    let g = expr.realize();
                    for _ in 0..*times {
                        acc = acc.disjoint_union(&g);
                    }
                }
                acc
            }
            StructuralExpr::Join(a, b) => a.realize().join(&b.realize()),
            StructuralExpr::Tensor(a, b) => a.realize().tensor_product(&b.realize()),
        }
    }
}

impl std::fmt::Display for StructuralExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructuralExpr::Kcirc(n) => write!(f, "K{n}o"),
            StructuralExpr::Union(terms) => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|(e, t)| if *t == 1 { format!("{e}") } else { format!("{t}({e})") })
                    .collect();
                write!(f, "({})", parts.join(" u "))
            }
            StructuralExpr::Join(a, b) => write!(f, "({a} v {b})"),
            StructuralExpr::Tensor(a, b) => write!(f, "({a} x {b})"),
        }
    }
}

/// Canonical form of a graph in the family produced by the structure
/// theorems: a universal looped clique joined with disjoint loop-cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueJoinForm {
    pub universal: usize,
    /// clique size -> number of cliques of that size
    pub cliques: BTreeMap<usize, usize>,
}

/// Identify the universal looped vertices, then verify every remaining
/// connected component is a clique with all loops. For K_n itself the
/// convention is (n, no cliques): every vertex is universal.
pub fn clique_join_decompose(g: &LoopGraph) -> Result<CliqueJoinForm, GraphError> {
    let n = g.vertex_count();
    let universal: Vec<usize> = (0..n)
        .filter(|&v| g.has_loop(v) && (0..n).all(|w| w == v || g.has_edge(v, w)))
        .collect();
    let is_universal = mark(n, &universal);
    let components = connected_components(g, &is_universal);
    let mut cliques: BTreeMap<usize, usize> = BTreeMap::new();
    for comp in components {
        for (idx, &v) in comp.iter().enumerate() {
            if !g.has_loop(v) {
                return Err(GraphError::NotInFamily(format!("vertex {v} has no loop")));
            }
            for &w in &comp[idx + 1..] {
                if !g.has_edge(v, w) {
                    return Err(GraphError::NotInFamily(format!(
                        "component containing {v} and {w} is not a clique"
                    )));
                }
            }
        }
        *cliques.entry(comp.len()).or_insert(0) += 1;
    }
    Ok(CliqueJoinForm { universal: universal.len(), cliques })
}

/// Decompose a loop-free graph into a disjoint union of cliques.
pub fn loopless_clique_union(g: &LoopGraph) -> Result<BTreeMap<usize, usize>, GraphError> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.has_loop(v)) {
        return Err(GraphError::NotInFamily(format!("vertex {v} carries a loop")));
    }
    let components = connected_components(g, &vec![false; n]);
    let mut cliques: BTreeMap<usize, usize> = BTreeMap::new();
    for comp in components {
        for (idx, &v) in comp.iter().enumerate() {
            for &w in &comp[idx + 1..] {
                if !g.has_edge(v, w) {
                    return Err(GraphError::NotInFamily(format!(
                        "component containing {v} and {w} is not a clique"
                    )));
                }
            }
        }
        *cliques.entry(comp.len()).or_insert(0) += 1;
    }
    Ok(cliques)
}

fn mark(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

#[allow(clippy::needless_range_loop)]
fn connected_components(g: &LoopGraph, excluded: &[bool]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = excluded.to_vec();
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut next = 0;
        while next < comp.len() {
            let v = comp[next];
            next += 1;
            for w in 0..n {
                if !seen[w] && w != v && g.has_edge(v, w) {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

const BRUTE_FORCE_LIMIT: usize = 12;

/// Isomorphism test, two-tier: the family decompositions cover every graph
/// the structure theorems produce; a permutation search with degree and
/// loop pruning handles arbitrary graphs up to 12 vertices.
pub fn is_isomorphic(g: &LoopGraph, h: &LoopGraph) -> Result<bool, GraphError> {
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    match (clique_join_decompose(g), clique_join_decompose(h)) {
        (Ok(a), Ok(b)) => return Ok(a == b),
        (Ok(_), Err(_)) | (Err(_), Ok(_)) => return Ok(false),
        (Err(_), Err(_)) => {}
    }
    match (loopless_clique_union(g), loopless_clique_union(h)) {
        (Ok(a), Ok(b)) => return Ok(a == b),
        (Ok(_), Err(_)) | (Err(_), Ok(_)) => return Ok(false),
        (Err(_), Err(_)) => {}
    }
    if g.vertex_count() <= BRUTE_FORCE_LIMIT {
        return Ok(brute_force_isomorphic(g, h));
    }
    Err(GraphError::Undecided)
}

fn signature(g: &LoopGraph, v: usize) -> (bool, usize) {
    (g.has_loop(v), g.degree(v))
}

fn brute_force_isomorphic(g: &LoopGraph, h: &LoopGraph) -> bool {
    let n = g.vertex_count();
    let mut g_sigs: Vec<(bool, usize)> = (0..n).map(|v| signature(g, v)).collect();
    let mut h_sigs: Vec<(bool, usize)> = (0..n).map(|v| signature(h, v)).collect();
    {
        let mut a = g_sigs.clone();
        let mut b = h_sigs.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        g: &LoopGraph,
        h: &LoopGraph,
        g_sigs: &mut [(bool, usize)],
        h_sigs: &mut [(bool, usize)],
        mapping: &mut [usize],
        used: &mut [bool],
        v: usize,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g_sigs[v] != h_sigs[w] {
                continue;
            }
            if (0..v).all(|u| g.has_edge(v, u) == h.has_edge(w, mapping[u]))
                && g.has_loop(v) == h.has_loop(w)
            {
                mapping[v] = w;
                used[w] = true;
                if extend(g, h, g_sigs, h_sigs, mapping, used, v + 1) {
                    return true;
                }
                used[w] = false;
                mapping[v] = usize::MAX;
            }
        }
        false
    }
    extend(g, h, &mut g_sigs, &mut h_sigs, &mut mapping, &mut used, 0)
}

// ---------------------------------------------------------------------------
// Export

/// JSON shape for graph exports. Edges are listed once, endpoints ascending;
/// loops are the diagonal entries.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub loops: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl LoopGraph {
    pub fn to_json(&self, weights: Option<&[u64]>, labels: Option<&[String]>) -> GraphJson {
        GraphJson {
            n: self.n,
            loops: self.loop_vertices(),
            edges: self.edges().map(|(i, j)| [i, j]).collect(),
            weights: weights.map(|w| w.to_vec()),
            labels: labels.map(|l| l.to_vec()),
        }
    }

    /// Graphviz rendering; loops become self-edges.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            match labels.and_then(|l| l.get(v)) {
                Some(label) => out.push_str(&format!("  {v} [label=\"{label}\"];\n")),
                None => out.push_str(&format!("  {v};\n")),
            }
        }
        for v in self.loop_vertices() {
            out.push_str(&format!("  {v} -- {v};\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A loop graph with a positive integer weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedLoopGraph {
    pub graph: LoopGraph,
    pub weights: Vec<u64>,
}

impl WeightedLoopGraph {
    pub fn to_json(&self, labels: Option<&[String]>) -> GraphJson {
        self.graph.to_json(Some(&self.weights), labels)
    }
}
