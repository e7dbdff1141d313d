//! The classical commuting graph on non-central elements can be rebuilt
//! from the weighted compressed graph: drop the universal vertices, blow up
//! each class to a clique of its weight, and remove loops.

use ringgraph::gf::FiniteField;
use ringgraph::graph::{is_isomorphic, loopless_clique_union};
use ringgraph::lambda::{commuting_graph, compressed_graph, reconstruct_gamma};
use ringgraph::rings::{ring_matrix2, DEFAULT_MAX_ORDER};

fn main() {
    let field = FiniteField::new(2, 2, DEFAULT_MAX_ORDER).unwrap();
    let ring = ring_matrix2(field, DEFAULT_MAX_ORDER).unwrap();

    let direct = commuting_graph(&ring);
    println!(
        "commuting graph of {}: {} vertices, {} edges",
        ring.descriptor(),
        direct.graph.vertex_count(),
        direct.graph.edge_count()
    );
    for (size, count) in loopless_clique_union(&direct.graph).unwrap() {
        println!("  {count} cliques of {size} vertices");
    }

    let compressed = compressed_graph(&ring, true).unwrap();
    println!(
        "compressed graph: {} vertices with weights summing to {}",
        compressed.vertex_count(),
        compressed.weights().iter().sum::<u64>()
    );

    let rebuilt = reconstruct_gamma(&compressed);
    assert!(is_isomorphic(&rebuilt, &direct.graph).unwrap());
    println!("reconstruction from the compressed graph matches");
}
