//! Cartesian products and powers, mixed-radix vertex addressing, and copy
//! enumeration in small hosts.
//!
//! Run with: cargo run --example cartesian_powers

use unit_ramsey::generators::{gen_standard, Family};
use unit_ramsey::graph::{cartesian_power, cartesian_product, find_copies, PowerIndex};

fn main() {
    let k2 = gen_standard(Family::Complete(2)).unwrap();
    let k3 = gen_standard(Family::Complete(3)).unwrap();
    let c4 = gen_standard(Family::Cycle(4)).unwrap();

    let q2 = cartesian_product(&k2, &k2).unwrap();
    println!(
        "K2 x K2: {} vertices, {} edges (a 4-cycle)",
        q2.n(),
        q2.edge_count()
    );

    let rook = cartesian_product(&k3, &k3).unwrap();
    println!(
        "K3 x K3: {} vertices, {} edges",
        rook.n(),
        rook.edge_count()
    );

    let k3_cubed = cartesian_power(&k3, 3).unwrap();
    println!(
        "K3^3:    {} vertices, {} edges",
        k3_cubed.n(),
        k3_cubed.edge_count()
    );

    // Vertex ids follow the mixed-radix convention: id = sum digits[i] * b^i.
    let idx = PowerIndex::from_id(14, 3, 3);
    println!(
        "vertex 14 of K3^3 has digits {:?} (least significant first)",
        idx.digits
    );
    assert_eq!(idx.id(), 14);

    // Every 4-cycle of the rook graph is an axis rectangle.
    let rectangles = find_copies(&rook, &c4, true, None).unwrap();
    println!("induced C4 copies in K3 x K3: {}", rectangles.sets.len());
    for set in &rectangles.sets {
        let cells: Vec<(u32, u32)> = set.iter().map(|&v| (v / 3, v % 3)).collect();
        println!("  {cells:?}");
    }

    // Q3 has exactly its six faces.
    let q3 = gen_standard(Family::Hypercube(3)).unwrap();
    let faces = find_copies(&q3, &c4, false, None).unwrap();
    println!("C4 copies in Q3: {}", faces.sets.len());
}
