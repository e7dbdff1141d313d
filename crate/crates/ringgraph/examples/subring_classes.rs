//! Enumerate the one-generated subrings of a small matrix ring and the
//! classes of elements generating each of them.

use ringgraph::gf::FiniteField;
use ringgraph::rings::{ring_matrix2, DEFAULT_MAX_ORDER};
use ringgraph::subring::{compression_classes, subring_generated};

fn main() {
    let field = FiniteField::new(2, 1, DEFAULT_MAX_ORDER).unwrap();
    let ring = ring_matrix2(field, DEFAULT_MAX_ORDER).unwrap();
    println!("{}: {} elements", ring.descriptor(), ring.order());

    for unital in [false, true] {
        let partition = compression_classes(&ring, unital).unwrap();
        let kind = if unital { "unital subrings" } else { "subrings" };
        println!("{} one-generated {kind}:", partition.classes.len());
        for class in &partition.classes {
            println!(
                "  size {:2} subring, generated by {} of {} elements",
                class.subring.len(),
                class.weight,
                ring.order()
            );
        }
    }

    // individual closures are available directly
    let e12 = 2; // the matrix unit with a single one in the upper right
    let sub = subring_generated(&ring, e12);
    println!("closure of element {e12}: {:?}", sub.carrier);
}
