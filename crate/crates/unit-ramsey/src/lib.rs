//! Exact verification toolkit for graph-valued Euclidean Ramsey questions at
//! desk scale: Cartesian powers of graphs and arrow relations `G →^r {H_i}`,
//! hypercube layer constructions with a partite-representation verifier,
//! bit-exact plane colorings with randomized falsification, and the odd-cycle
//! circumradius / product-bound numerics.
//!
//! Start with the runnable examples (`cargo run --example <name>`) or the
//! `unit-ramsey` binary, which exposes every operation as a subcommand with
//! JSON reports.

pub mod arrow;
pub mod bits;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod plane;
pub mod rng;
pub mod slices;

pub use error::{Error, Result};
pub use graph::{
    build_graph, cartesian_power, cartesian_product, chi_generalized, chromatic_number,
    find_copies, independence_number, is_copy, Coloring, Embedding, Graph, PowerIndex,
};
