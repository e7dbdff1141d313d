//! Export a compressed commuting graph as Graphviz DOT and as JSON. Labels
//! carry the generated subring size and the class weight.

use ringgraph::lambda::compressed_graph;
use ringgraph::rings::{ring_zmod, DEFAULT_MAX_ORDER};

fn main() {
    let ring = ring_zmod(12, DEFAULT_MAX_ORDER).unwrap();
    let graph = compressed_graph(&ring, false).unwrap();
    let labels = graph.labels();

    println!("DOT:");
    print!("{}", graph.graph().to_dot(Some(&labels)));

    println!("JSON:");
    let json = graph.weighted.to_json(Some(&labels));
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
}
