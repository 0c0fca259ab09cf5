//! Unit-distance graphs from coordinate data: the bundled Moser spindle and
//! ad-hoc point sets, with the near-threshold audit.
//!
//! Run with: cargo run --example unit_distance_ingest

use unit_ramsey::generators::{
    ingest_unit_distance, moser_spindle, parse_coordinate_csv, MOSER_SPINDLE_CSV,
};
use unit_ramsey::graph::chromatic_number;

fn main() {
    let spindle = moser_spindle();
    println!(
        "Moser spindle from bundled coordinates: {} vertices, {} edges, chi = {}",
        spindle.n(),
        spindle.edge_count(),
        chromatic_number(&spindle).unwrap()
    );
    println!("graph json: {}", spindle.to_json());

    let points = parse_coordinate_csv(MOSER_SPINDLE_CSV).unwrap();
    let (_, audit) = ingest_unit_distance(&points, 1e-9).unwrap();
    println!(
        "ingest audit: {} near-threshold pairs, {} duplicate flags",
        audit.near_threshold.len(),
        audit.duplicates.len()
    );

    // A unit square: the diagonals stay out.
    let square = vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ];
    let (g, _) = ingest_unit_distance(&square, 1e-9).unwrap();
    println!(
        "unit square corners: {} edges (C4, diagonals excluded)",
        g.edge_count()
    );

    // One side misses the tolerance but lands inside the 10x audit band.
    let wobbly = vec![vec![0.0, 0.0], vec![1.0002, 0.0], vec![0.5, 0.866]];
    let (g, audit) = ingest_unit_distance(&wobbly, 1e-4).unwrap();
    println!(
        "wobbly triangle at eps=1e-4: {} edges, near-threshold pairs: {:?}",
        g.edge_count(),
        audit.near_threshold
    );
}
