//! Commuting graphs of finite rings.
//!
//! The crate builds finite rings (fields, matrix rings, products, truncated
//! polynomial rings, unitalizations) over an enumerable carrier, partitions
//! them into classes of elements generating the same one-generated subring,
//! and studies the resulting compressed commuting graphs alongside the
//! classical commuting graph. Closed-form predictions for these graphs are
//! available in [`verify`], and [`cli`] exposes the command line interface
//! behind the `ringgraph` binary.
//!
//! ```
//! use ringgraph::lambda::compressed_graph;
//! use ringgraph::rings::{ring_gf, DEFAULT_MAX_ORDER};
//!
//! let field = ring_gf(2, 6, DEFAULT_MAX_ORDER).unwrap();
//! let graph = compressed_graph(&field, true).unwrap();
//! // one vertex per divisor of 6, with class sizes as weights
//! assert_eq!(graph.vertex_count(), 4);
//! let mut weights = graph.weights().to_vec();
//! weights.sort_unstable_by(|a, b| b.cmp(a));
//! assert_eq!(weights, vec![54, 6, 2, 2]);
//! ```

pub mod cache;
pub mod cli;
pub mod descriptor;
pub mod gf;
pub mod graph;
pub mod lambda;
pub mod numtheory;
pub mod rings;
pub mod subring;
pub mod verify;

pub use descriptor::RingDescriptor;
pub use graph::{LoopGraph, StructuralExpr, WeightedLoopGraph};
pub use lambda::{commuting_graph, compressed_graph, CompressedGraph};
pub use rings::{FiniteRing, RingError, DEFAULT_MAX_ORDER};
pub use subring::{compression_classes, subring_generated, unital_subring_generated};
