//! Randomized falsification of monochromatic configurations under the plane
//! colorings: strips kill triangles but not paths, the two 4-colorings kill
//! unit rhombi, and the staircase 2-coloring kills Q11 box copies.
//!
//! Run with: cargo run --example plane_falsification
//! (larger trial counts than the defaults here are used in the test suite)

use unit_ramsey::plane::{color_at, falsify, ConfigKind, PlaneScheme};

fn main() {
    let strips = PlaneScheme::strips(PlaneScheme::triangle_free_strip_width()).unwrap();
    let hex = PlaneScheme::hex4(2.0 / 3.0).unwrap();
    let square = PlaneScheme::square4();
    let stair = PlaneScheme::staircase(PlaneScheme::q11_free_staircase_run()).unwrap();

    let outcome = |hit: &Option<(u64, unit_ramsey::plane::ConfigWitness)>| match hit {
        None => "none found".to_string(),
        Some((trial, _)) => format!("monochromatic witness at trial {trial}"),
    };

    let hit = falsify(&strips, ConfigKind::Triangle, 100_000, 0);
    println!(
        "strips(sqrt3/2) vs unit triangles, 1e5 trials: {}",
        outcome(&hit)
    );

    let hit = falsify(&strips, ConfigKind::Path3, 1_000, 0);
    println!(
        "strips(sqrt3/2) vs 3-point paths,  1e3 trials: {}",
        outcome(&hit)
    );
    if let Some((_, w)) = &hit {
        let colors: Vec<u32> = w
            .points
            .iter()
            .map(|&(x, y)| color_at(&strips, x, y))
            .collect();
        println!("  witness points {:?} colors {colors:?}", w.points);
    }

    let hit = falsify(&hex, ConfigKind::Rhombus, 100_000, 0);
    println!(
        "hex4(2/3) vs unit rhombi,          1e5 trials: {}",
        outcome(&hit)
    );

    let hit = falsify(&square, ConfigKind::Rhombus, 100_000, 0);
    println!(
        "square4 vs unit rhombi,            1e5 trials: {}",
        outcome(&hit)
    );

    let hit = falsify(&stair, ConfigKind::BoxCopy(11), 2_000, 0);
    println!(
        "staircase vs Q11 boxes (2048 pts), 2e3 trials: {}",
        outcome(&hit)
    );

    // A 2-coloring cannot kill paths: here is a near-instant witness, fully
    // reproducible from the seed.
    let hit = falsify(&stair, ConfigKind::Path3, 1_000, 0);
    println!(
        "staircase vs 3-point paths,        1e3 trials: {}",
        outcome(&hit)
    );
}
