//! Adjoining an identity to a ring without one. The compressed commuting
//! graph of the original ring and the unital compressed commuting graph of
//! the extension are isomorphic, with class weights scaled by the adjoined
//! modulus.

use ringgraph::lambda::unitalization_iso;
use ringgraph::rings::{ring_trivial_mul, unitalization, DEFAULT_MAX_ORDER};

fn main() {
    // additive group Z_2 with all products zero, the smallest ring without
    // an identity (isomorphic to the subring {0, 2} of Z_4)
    let ring = ring_trivial_mul(2, DEFAULT_MAX_ORDER).unwrap();
    println!("{}: order {}, unital: {}", ring.descriptor(), ring.order(), ring.is_unital());

    let ext = unitalization(&ring, DEFAULT_MAX_ORDER).unwrap();
    println!(
        "{}: order {}, unital: {}",
        ext.ring.descriptor(),
        ext.ring.order(),
        ext.ring.is_unital()
    );

    let (inner_graph, ext_graph, map) = unitalization_iso(&ring, &ext).unwrap();
    println!("class bijection:");
    for (i, &j) in map.iter().enumerate() {
        println!(
            "  class {} (weight {}) -> class {} (weight {})",
            i,
            inner_graph.weights()[i],
            j,
            ext_graph.weights()[j as usize]
        );
    }
}
