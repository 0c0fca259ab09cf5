//! Exact strong Turan numbers on tiny hypercubes: the most edges a subgraph
//! of Q_N can keep while containing no copy of a bipartite pattern placed
//! with its two sides on adjacent vertex layers.
//!
//! Run with: cargo run --example strong_turan

use unit_ramsey::generators::{gen_standard, Family};
use unit_ramsey::slices::strong_turan_number;

fn main() {
    // A single layer-respecting edge is unavoidable: every edge qualifies.
    let k2 = gen_standard(Family::Complete(2)).unwrap();
    for n in 1..=3 {
        println!(
            "m({n}, K2) = {}",
            strong_turan_number(n, &k2, &[0], &[1]).unwrap()
        );
    }

    // P3 with both leaves up forbids any vertex with two upward edges.
    let p3 = gen_standard(Family::Path(3)).unwrap();
    for n in 2..=4 {
        println!(
            "m({n}, P3 leaves-up) = {}",
            strong_turan_number(n, &p3, &[0, 2], &[1]).unwrap()
        );
    }

    // C4 admits no placement with one side per layer, so nothing is forbidden.
    let c4 = gen_standard(Family::Cycle(4)).unwrap();
    println!(
        "m(3, C4) = {} (all of E(Q3))",
        strong_turan_number(3, &c4, &[0, 2], &[1, 3]).unwrap()
    );

    // C6 lives in the middle edge layer of Q3 exactly once.
    let c6 = gen_standard(Family::Cycle(6)).unwrap();
    let (a, b) = c6.bipartition().unwrap();
    println!(
        "m(3, C6) = {}",
        strong_turan_number(3, &c6, &a, &b).unwrap()
    );
    println!(
        "m(4, C6) = {}",
        strong_turan_number(4, &c6, &a, &b).unwrap()
    );

    // Beyond N = 4 the edge-subset search is out of budget by design.
    println!(
        "m(5, K2) -> {:?}",
        strong_turan_number(5, &k2, &[0], &[1]).err().unwrap()
    );
}
