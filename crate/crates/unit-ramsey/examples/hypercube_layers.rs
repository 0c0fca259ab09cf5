//! Hypercube layer systems: even cycles realized between adjacent vertex
//! layers, the machine verifier for partite representations, and the pole
//! graph that is layered but never induced in a layer.
//!
//! Run with: cargo run --example hypercube_layers

use unit_ramsey::generators::{cycle_layer_representation, gen_standard, h_poles_graph, Family};
use unit_ramsey::slices::verify_partite_representation;

fn main() {
    for l in [4usize, 6, 7, 8, 9] {
        let (n, a, _b) = cycle_layer_representation(l).unwrap();
        let pattern = gen_standard(Family::Cycle(2 * l)).unwrap();
        let report = verify_partite_representation(n, a.k, &a, &pattern, true).unwrap();
        println!(
            "C{:<2} in layers {}/{} of Q{n}: induced={} partite={} found={}",
            2 * l,
            a.k,
            a.k - 1,
            report.is_induced,
            report.hypergraph_partite,
            report.pattern_found
        );
        if let Some(parts) = report.partition {
            println!("   ground partition: {parts:?}");
        }
    }

    // C10 (and C4, C6) have no such representation.
    println!("l=5 supported: {}", cycle_layer_representation(5).is_ok());

    // The pole graph H(t): t-1 paths of length five sharing only their ends.
    for t in [4usize, 5] {
        let (g, ground, sets) = h_poles_graph(t).unwrap();
        println!(
            "H({t}): {} vertices, {} edges, embedded in layers {}/{} of Q{ground}",
            g.n(),
            g.edge_count(),
            t + 1,
            t
        );
        let ok = g.edges().iter().all(|&(u, v)| {
            sets[u as usize]
                .symmetric_difference(&sets[v as usize])
                .count()
                == 1
        });
        println!("   embedding edges are hypercube edges: {ok}");
    }
}
