//! G-slices of Cartesian powers: counting fully-present slices, iterated
//! peeling by slice degree, and the greedy H-tree embedding that picks a
//! fresh direction for every copy.
//!
//! Run with: cargo run --example slice_peeling

use unit_ramsey::generators::{gen_standard, Family};
use unit_ramsey::graph::is_copy;
use unit_ramsey::slices::{
    greedy_forest_embed, peel_by_slice_degree, slice_fraction, PowerSubgraph, SliceId,
};

fn main() {
    let k3 = gen_standard(Family::Complete(3)).unwrap();

    let full = PowerSubgraph::full(&k3, 2).unwrap();
    println!("full K3^2 slice census: {:?}", slice_fraction(&full));

    // Break one slice: the peel with threshold 2 cascades to nothing.
    let mut broken = full.clone();
    let slice = SliceId {
        direction: 0,
        fixed: vec![0],
    };
    for &(u, v) in k3.edges() {
        broken.remove_edge(slice.vertex(3, u) as u32, slice.vertex(3, v) as u32);
    }
    println!("after breaking one slice:  {:?}", slice_fraction(&broken));
    println!(
        "peel threshold 1 leaves {} vertices",
        peel_by_slice_degree(&broken, 1).count()
    );
    println!(
        "peel threshold 2 leaves {} vertices",
        peel_by_slice_degree(&broken, 2).count()
    );

    // Greedy H-tree embedding: a bowtie out of two K3 slices in K3^3.
    let host = PowerSubgraph::full(&k3, 3).unwrap();
    let (pattern, emb) = greedy_forest_embed(&host, &[(2, 0)]).unwrap();
    println!(
        "bowtie in K3^3: pattern {}v/{}e, images {:?}, induced copy: {}",
        pattern.n(),
        pattern.edge_count(),
        emb.images,
        is_copy(host.power_graph(), &pattern, &emb, true).unwrap()
    );

    // A path P4 out of three K2 slices of Q4.
    let k2 = gen_standard(Family::Complete(2)).unwrap();
    let q4 = PowerSubgraph::full(&k2, 4).unwrap();
    let (pattern, emb) = greedy_forest_embed(&q4, &[(1, 0), (2, 0)]).unwrap();
    println!(
        "P4 in Q4: images {:?}, induced copy: {}",
        emb.images,
        is_copy(q4.power_graph(), &pattern, &emb, true).unwrap()
    );

    // When only one direction has slices, a second copy cannot be placed.
    let dir0: Vec<(u32, u32)> = host
        .power_graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| u % 3 != v % 3 && u / 3 == v / 3)
        .collect();
    let starved = PowerSubgraph::with_edges(&k3, 3, &dir0).unwrap();
    println!(
        "single-direction host: {:?}",
        greedy_forest_embed(&starved, &[(2, 0)]).err().unwrap()
    );
}
