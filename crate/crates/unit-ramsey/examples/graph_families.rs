//! The graph family constructors: standard families, edge substitutions, and
//! H-forests glued copy by copy.
//!
//! Run with: cargo run --example graph_families

use unit_ramsey::generators::{gamma_substitution, gen_standard, h_forest, Family};
use unit_ramsey::graph::find_copies;

fn main() {
    for (label, family) in [
        ("J(4,2,1)", Family::Johnson(4, 2, 1)),
        ("Q4", Family::Hypercube(4)),
        ("L2(Q3)", Family::EdgeLayer(3, 2)),
        ("K_{1,5}", Family::Star(5)),
    ] {
        let g = gen_standard(family).unwrap();
        println!("{label}: {} vertices, {} edges", g.n(), g.edge_count());
    }

    // Middle edge layer of Q3 is a 6-cycle.
    let layer = gen_standard(Family::EdgeLayer(3, 2)).unwrap();
    let c6 = gen_standard(Family::Cycle(6)).unwrap();
    let hit = find_copies(&layer, &c6, true, Some(1)).unwrap();
    println!("L2(Q3) contains an induced C6: {}", !hit.sets.is_empty());

    // Substituting a triangle for each edge of a path gives a bowtie.
    let p3 = gen_standard(Family::Path(3)).unwrap();
    let k3 = gen_standard(Family::Complete(3)).unwrap();
    let bowtie = gamma_substitution(&p3, &[0, 2], &[1], &k3, 0, 1).unwrap();
    println!(
        "bowtie via substitution: {} vertices, {} edges",
        bowtie.n(),
        bowtie.edge_count()
    );

    // Substituting C3 into C12 leaves a 13-cycle inside.
    let c12 = gen_standard(Family::Cycle(12)).unwrap();
    let (a, b) = c12.bipartition().unwrap();
    let host = gamma_substitution(&c12, &a, &b, &k3, 0, 1).unwrap();
    let c13 = gen_standard(Family::Cycle(13)).unwrap();
    let found = find_copies(&host, &c13, false, Some(1)).unwrap();
    println!(
        "C12 with triangle edges: {} vertices, {} edges, contains C13: {}",
        host.n(),
        host.edge_count(),
        !found.sets.is_empty()
    );

    // K2-forests are ordinary forests; chaining three edges gives P4.
    let k2 = gen_standard(Family::Complete(2)).unwrap();
    let p4 = h_forest(&k2, &[Some((1, 0)), Some((2, 0))]).unwrap();
    println!("chained K2-tree: path on {} vertices", p4.n());

    // Two disjoint 4-cycles.
    let c4 = gen_standard(Family::Cycle(4)).unwrap();
    let pair = h_forest(&c4, &[None]).unwrap();
    println!(
        "two disjoint C4s: {} vertices, {} edges",
        pair.n(),
        pair.edge_count()
    );
}
