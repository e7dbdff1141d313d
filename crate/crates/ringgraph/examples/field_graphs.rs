//! Compressed commuting graphs of finite fields: the graph is a looped
//! clique with one vertex per subfield, and the class weights count elements
//! by the degree of their minimal polynomial.

use ringgraph::lambda::compressed_graph;
use ringgraph::rings::{ring_gf, DEFAULT_MAX_ORDER};
use ringgraph::verify::predict_field;

fn main() {
    for (p, n) in [(2u64, 6u64), (3, 4), (5, 2)] {
        let ring = ring_gf(p, n, DEFAULT_MAX_ORDER).unwrap();
        println!("{} ({} elements)", ring.descriptor(), ring.order());
        for unital in [true, false] {
            let graph = compressed_graph(&ring, unital).unwrap();
            let mut weights = graph.weights().to_vec();
            weights.sort_unstable_by(|a, b| b.cmp(a));
            let kind = if unital { "unital " } else { "" };
            println!(
                "  {kind}graph: {} vertices, weights {:?}",
                graph.vertex_count(),
                weights
            );
            let predicted = predict_field(p, n, unital);
            assert_eq!(graph.vertex_count() as u64, predicted.vertex_count);
            assert_eq!(weights, predicted.weights.unwrap());
        }
    }
    println!("all computed graphs match the closed-form prediction");
}
