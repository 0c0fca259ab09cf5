//! Orthogonal tree embeddings: each edge on its own axis. A star with legs
//! 1/sqrt(2) puts its leaves pairwise at distance 1, giving unit cliques.
//!
//! Run with: cargo run --example orthogonal_trees

use unit_ramsey::bounds::orthogonal_tree_unit_copy;
use unit_ramsey::generators::{gen_standard, h_forest, Family};

fn main() {
    let inv_sqrt2 = 1.0 / std::f64::consts::SQRT_2;

    for d in [3usize, 6] {
        let star = gen_standard(Family::Star(d)).unwrap();
        let pts = orthogonal_tree_unit_copy(&star, &vec![inv_sqrt2; d]).unwrap();
        let mut max_dev = 0.0f64;
        for i in 1..=d {
            for j in i + 1..=d {
                let dist: f64 = (0..d)
                    .map(|c| (pts[i][c] - pts[j][c]).powi(2))
                    .sum::<f64>()
                    .sqrt();
                max_dev = max_dev.max((dist - 1.0).abs());
            }
        }
        println!(
            "K_{{1,{d}}} with legs 1/sqrt2: leaf set is a unit K_{d}, max |d - 1| = {max_dev:.2e}"
        );
    }

    // A path with unit legs: orthogonal corners, sqrt(2) endpoints.
    let p3 = gen_standard(Family::Path(3)).unwrap();
    let pts = orthogonal_tree_unit_copy(&p3, &[1.0, 1.0]).unwrap();
    let endpoints: f64 = (0..2)
        .map(|c| (pts[0][c] - pts[2][c]).powi(2))
        .sum::<f64>()
        .sqrt();
    println!("P3 with unit legs: endpoint distance = {endpoints:.12}");

    // Any tree works; a caterpillar built as a K2-forest.
    let k2 = gen_standard(Family::Complete(2)).unwrap();
    let caterpillar = h_forest(&k2, &[Some((1, 0)), Some((1, 0)), Some((2, 0))]).unwrap();
    let lengths: Vec<f64> = (0..caterpillar.edge_count())
        .map(|i| 0.5 + 0.25 * i as f64)
        .collect();
    let pts = orthogonal_tree_unit_copy(&caterpillar, &lengths).unwrap();
    println!(
        "caterpillar on {} vertices embedded in R^{} with per-edge lengths {:?}",
        pts.len(),
        caterpillar.edge_count(),
        lengths
    );
}
