//! Ring homomorphisms induce maps on compression classes. This example
//! validates the subfield inclusion GF(2) -> GF(4) and the squaring
//! automorphism of GF(4), then follows both through the induced class maps.

use ringgraph::gf::FiniteField;
use ringgraph::lambda::{compressed_graph, induced_class_map, validate_morphism};
use ringgraph::rings::{ring_gf, DEFAULT_MAX_ORDER};

fn main() {
    let f2 = ring_gf(2, 1, DEFAULT_MAX_ORDER).unwrap();
    let f4 = ring_gf(2, 2, DEFAULT_MAX_ORDER).unwrap();

    // inclusion of the prime field
    let incl: Vec<u64> = vec![0, 1];
    validate_morphism(&f2, &f4, &incl, true).unwrap();

    // Frobenius a -> a^2
    let field = FiniteField::new(2, 2, DEFAULT_MAX_ORDER).unwrap();
    let frob: Vec<u64> = (0..4).map(|a| field.mul(a, a)).collect();
    validate_morphism(&f4, &f4, &frob, true).unwrap();

    let g2 = compressed_graph(&f2, true).unwrap();
    let g4 = compressed_graph(&f4, true).unwrap();

    let incl_classes = induced_class_map(&g2, &g4, &incl).unwrap();
    println!("inclusion GF(2) -> GF(4) on classes: {incl_classes:?}");

    let frob_classes = induced_class_map(&g4, &g4, &frob).unwrap();
    println!("Frobenius on GF(4) classes: {frob_classes:?}");
    // an automorphism permutes the classes; here it even fixes them
    assert_eq!(frob_classes, vec![0, 1]);
}
