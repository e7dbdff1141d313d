//! Commuting graphs of finite rings: the classical graph on non-central
//! elements, and the compressed variants on one-generated subrings, with
//! functorial induced maps and the unitalization correspondence.

use crate::graph::{LoopGraph, WeightedLoopGraph};
use crate::rings::{center, FiniteRing, RingError, Unitalization};
use crate::subring::{compression_classes, Partition, SubringId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("map length {got} does not match source order {expected}")]
    LengthMismatch { expected: u64, got: usize
    },
    #[error("image {image} out of range for target of order {order}")]
    ImageOutOfRange { image: u64, order: u64 },
    #[error("map is not additive at ({a}, {b})")]
    NotAdditive { a: u64, b: u64 },
    #[error("map is not multiplicative at ({a}, {b})")]
    NotMultiplicative { a: u64, b: u64 },
    #[error("map does not send identity to identity")]
    NotUnitalMap,
    #[error("induced class map is not well defined: elements {a} and {b} share a class but their images do not")]
    NotWellDefined { a: u64, b: u64 },
    #[error("induced class map is not a bijection")]
    NotBijective,
    #[error("induced class map does not preserve adjacency between classes {i} and {j}")]
    NotEdgePreserving { i: usize, j: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Classical commuting graph: one vertex per non-central element, an edge
/// between distinct vertices whose elements commute, no loops.
#[derive(Debug, Clone)]
pub struct CommutingGraph {
    pub graph: LoopGraph,
    /// element code behind each vertex
    pub vertices: Vec<u64>,
}

pub fn commuting_graph(ring: &FiniteRing) -> CommutingGraph {
    let central = center(ring);
    let vertices: Vec<u64> = ring
        .elements()
        .filter(|&a| central.binary_search(&a).is_err())
        .collect();
    let n = vertices.len();
    let mut graph = LoopGraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (vertices[i], vertices[j]);
            if ring.mul(a, b) == ring.mul(b, a) {
                graph.add_edge(i, j);
            }
        }
    }
    CommutingGraph { graph, vertices }
}

/// Compressed commuting graph: one vertex per compression class, every
/// vertex looped, an edge whenever the classes' elements commute. Weights
/// record class sizes.
#[derive(Debug, Clone)]
pub struct CompressedGraph {
    pub weighted: WeightedLoopGraph,
    pub classes: Vec<SubringId>,
    pub class_of: Vec<u32>,
    /// least member of each class, used as the commuting representative
    pub representatives: Vec<u64>,
    pub unital: bool,
    pub descriptor: String,
}

impl CompressedGraph {
    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    pub fn graph(&self) -> &LoopGraph {
        &self.weighted.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weighted.weights
    }

    /// One label per vertex: the subring size and the class weight.
    pub fn labels(&self) -> Vec<String> {
        self.classes
            .iter()
            .zip(&self.weighted.weights)
            .map(|(s, w)| format!("|S|={},w={}", s.len(), w))
            .collect()
    }
}

/// Build the compressed commuting graph from the class partition. Adjacency
/// is tested on least-member representatives; commuting is a class property,
/// so the choice of representative does not matter.
pub fn compressed_graph(ring: &FiniteRing, unital: bool) -> Result<CompressedGraph, RingError> {
    let partition = compression_classes(ring, unital)?;
    Ok(compressed_from_partition(ring, partition))
}

fn compressed_from_partition(ring: &FiniteRing, partition: Partition) -> CompressedGraph {
    let k = partition.classes.len();
    let representatives: Vec<u64> = partition.classes.iter().map(|c| c.members[0]).collect();
    let weights: Vec<u64> = partition.classes.iter().map(|c| c.weight).collect();
    let mut graph = LoopGraph::new(k);
    for i in 0..k {
        graph.add_edge(i, i);
        for j in (i + 1)..k {
            let (a, b) = (representatives[i], representatives[j]);
            if ring.mul(a, b) == ring.mul(b, a) {
                graph.add_edge(i, j);
            }
        }
    }
    CompressedGraph {
        weighted: WeightedLoopGraph { graph, weights },
        classes: partition.classes.into_iter().map(|c| c.subring).collect(),
        class_of: partition.class_of,
        representatives,
        unital: partition.unital,
        descriptor: ring.descriptor().to_string(),
    }
}

/// Check that `map` (indexed by source element code) is a ring homomorphism,
/// exhaustively over all pairs. With `unital` it must also send 1 to 1.
pub fn validate_morphism(
    src: &FiniteRing,
    dst: &FiniteRing,
    map: &[u64],
    unital: bool,
) -> Result<(), MorphismError> {
    if map.len() as u64 != src.order() {
        return Err(MorphismError::LengthMismatch { expected: src.order(), got: map.len() });
    }
    for &im in map {
        if im >= dst.order() {
            return Err(MorphismError::ImageOutOfRange { image: im, order: dst.order() });
        }
    }
    for a in src.elements() {
        for b in src.elements() {
            if map[src.add(a, b) as usize] != dst.add(map[a as usize], map[b as usize]) {
                return Err(MorphismError::NotAdditive { a, b });
            }
            if map[src.mul(a, b) as usize] != dst.mul(map[a as usize], map[b as usize]) {
                return Err(MorphismError::NotMultiplicative { a, b });
            }
        }
    }
    if unital {
        let s1 = src.one().ok_or(MorphismError::Ring(RingError::NotUnital))?;
        let d1 = dst.one().ok_or(MorphismError::Ring(RingError::NotUnital))?;
        if map[s1 as usize] != d1 {
            return Err(MorphismError::NotUnitalMap);
        }
    }
    Ok(())
}

/// The map a homomorphism induces on compression classes: [a] goes to
/// [f(a)]. Verified well defined over every element, not just
/// representatives.
pub fn induced_class_map(
    src_graph: &CompressedGraph,
    dst_graph: &CompressedGraph,
    map: &[u64],
) -> Result<Vec<u32>, MorphismError> {
    if map.len() != src_graph.class_of.len() {
        return Err(MorphismError::LengthMismatch {
            expected: src_graph.class_of.len() as u64,
            got: map.len(),
        });
    }
    let k = src_graph.vertex_count();
    let mut class_map: Vec<Option<u32>> = vec![None; k];
    let mut witness: Vec<u64> = vec![0; k];
    for (a, &src_class) in src_graph.class_of.iter().enumerate() {
        let image_class = dst_graph.class_of[map[a] as usize];
        match class_map[src_class as usize] {
            None => {
                class_map[src_class as usize] = Some(image_class);
                witness[src_class as usize] = a as u64;
            }
            Some(existing) if existing != image_class => {
                return Err(MorphismError::NotWellDefined {
                    a: witness[src_class as usize],
                    b: a as u64,
                });
            }
            Some(_) => {}
        }
    }
    Ok(class_map.into_iter().map(|c| c.expect("every class has a member")).collect())
}

/// The canonical correspondence between the compressed graph of a ring and
/// the unital compressed graph of its unitalization: [a] goes to the class
/// of the embedded element. Returns the class bijection, or an error if it
/// fails to be a weight-preserving graph isomorphism.
pub fn unitalization_iso(
    inner: &FiniteRing,
    ext: &Unitalization,
) -> Result<(CompressedGraph, CompressedGraph, Vec<u32>), MorphismError> {
    let inner_graph = compressed_graph(inner, false)?;
    let ext_graph = compressed_graph(&ext.ring, true)?;
    let k = inner_graph.vertex_count();
    if k != ext_graph.vertex_count() {
        return Err(MorphismError::NotBijective);
    }
    let mut map: Vec<Option<u32>> = vec![None; k];
    for a in inner.elements() {
        let src_class = inner_graph.class_of[a as usize];
        let image_class = ext_graph.class_of[ext.embed(a) as usize];
        match map[src_class as usize] {
            None => map[src_class as usize] = Some(image_class),
            Some(existing) if existing != image_class => {
                return Err(MorphismError::NotWellDefined { a: 0, b: a });
            }
            Some(_) => {}
        }
    }
    let map: Vec<u32> = map.into_iter().map(|c| c.expect("every class has a member")).collect();
    let mut hit = vec![false; k];
    for &c in &map {
        if std::mem::replace(&mut hit[c as usize], true) {
            return Err(MorphismError::NotBijective);
        }
    }
    for i in 0..k {
        // each class of R^1 collects every lift of a class of R, so its
        // weight is the original weight scaled by the adjoined modulus
        if ext.modulus() * inner_graph.weights()[i] != ext_graph.weights()[map[i] as usize] {
            return Err(MorphismError::NotBijective);
        }
        for j in i..k {
            if inner_graph.graph().has_edge(i, j)
                != ext_graph.graph().has_edge(map[i] as usize, map[j] as usize)
            {
                return Err(MorphismError::NotEdgePreserving { i, j });
            }
        }
    }
    Ok((inner_graph, ext_graph, map))
}

/// Rebuild the classical commuting graph from a compressed graph: drop the
/// universal looped vertices (central classes), expand each remaining vertex
/// into a clique of its weight, connect expanded cliques along edges, and
/// drop loops.
pub fn reconstruct_gamma(c: &CompressedGraph) -> LoopGraph {
    let g = c.graph();
    let k = c.vertex_count();
    let central: Vec<bool> = (0..k)
        .map(|v| g.has_loop(v) && (0..k).all(|w| w == v || g.has_edge(v, w)))
        .collect();
    let kept: Vec<usize> = (0..k).filter(|&v| !central[v]).collect();
    let offsets: Vec<usize> = kept
        .iter()
        .scan(0usize, |acc, &v| {
            let start = *acc;
            *acc += c.weights()[v] as usize;
            Some(start)
        })
        .collect();
    let total: usize = kept.iter().map(|&v| c.weights()[v] as usize).sum();
    let mut out = LoopGraph::new(total);
    for (i, &v) in kept.iter().enumerate() {
        let wv = c.weights()[v] as usize;
        for x in 0..wv {
            for y in (x + 1)..wv {
                out.add_edge(offsets[i] + x, offsets[i] + y);
            }
        }
        for (j, &w) in kept.iter().enumerate().skip(i + 1) {
            if !g.has_edge(v, w) {
                continue;
            }
            let ww = c.weights()[w] as usize;
            for x in 0..wv {
                for y in 0..ww {
                    out.add_edge(offsets[i] + x, offsets[j] + y);
                }
            }
        }
    }
    out
}
