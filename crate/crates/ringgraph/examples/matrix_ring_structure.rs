//! The compressed commuting graph of a 2x2 matrix ring decomposes as the
//! scalar classes joined to a disjoint union of cliques, one clique per
//! centralizer. This example computes the graph for M2(GF(3)) and checks it
//! against the predicted structure expression.

use ringgraph::gf::FiniteField;
use ringgraph::graph::{clique_join_decompose, is_isomorphic};
use ringgraph::lambda::compressed_graph;
use ringgraph::rings::{ring_matrix2, DEFAULT_MAX_ORDER};
use ringgraph::verify::predict_m2;

fn main() {
    let field = FiniteField::new(3, 1, DEFAULT_MAX_ORDER).unwrap();
    let ring = ring_matrix2(field, DEFAULT_MAX_ORDER).unwrap();
    println!("{}: {} elements", ring.descriptor(), ring.order());

    for unital in [true, false] {
        let graph = compressed_graph(&ring, unital).unwrap();
        let form = clique_join_decompose(graph.graph()).unwrap();
        let kind = if unital { "unital" } else { "non-unital" };
        println!("{kind}: {} vertices", graph.vertex_count());
        println!("  universal clique: {} vertices", form.universal);
        for (size, count) in &form.cliques {
            println!("  {count} cliques of {size} vertices");
        }

        let prediction = predict_m2(3, 1, unital);
        println!("  predicted: {}", prediction.expr.as_ref().unwrap());
        let realized = prediction.expr.as_ref().unwrap().realize();
        assert!(is_isomorphic(graph.graph(), &realized).unwrap());
        println!("  structure matches");
    }
}
