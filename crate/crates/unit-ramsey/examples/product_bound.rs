//! The product bound on colorings without induced monochromatic 4-cycles:
//! direct evaluation, Johnson-graph statistics feeding it, and the exponent
//! optimization that yields the 1.0792 base.
//!
//! Run with: cargo run --example product_bound

use unit_ramsey::bounds::{
    exponent_optimize, exponent_optimize_with_psi, frankl_rodl_bound, johnson_stats, PSI,
};
use unit_ramsey::generators::{gen_standard, Family};
use unit_ramsey::graph::independence_number;

fn main() {
    // Hand-checkable evaluations.
    let r = frankl_rodl_bound(5, 2, 5, 5, 2).unwrap();
    println!(
        "C5/C5 inputs: bound = {} (alpha_ind upper bound {})",
        r.value, r.alpha_ind_upper
    );
    let r = frankl_rodl_bound(3, 1, 3, 3, 1).unwrap();
    println!("K3/K3 inputs: bound = {}", r.value);

    // The same inputs computed by the exact solver.
    let c5 = gen_standard(Family::Cycle(5)).unwrap();
    let alpha = independence_number(&c5).unwrap() as u64;
    let r = frankl_rodl_bound(5, alpha, 5, 5, alpha).unwrap();
    println!("C5 stats from the solver: bound = {}", r.value);

    // Johnson graphs supply the H side; the Frankl-Wilson bound applies when
    // k <= n/2, t <= k/2 and k - t is prime.
    for (n, k, t) in [(4u64, 2u64, 1u64), (8, 4, 2), (6, 3, 1)] {
        let s = johnson_stats(n, k, t).unwrap();
        println!(
            "J({n},{k},{t}): V = {}, E = {}, alpha <= {} (applicable: {})",
            s.vertices, s.edges, s.alpha_upper, s.fw_applicable
        );
    }

    let opt = exponent_optimize();
    println!(
        "optimized exponent (psi = {PSI}): base = {:.4}, kappa = {:.4}",
        opt.base, opt.kappa
    );

    let flat = exponent_optimize_with_psi(1.0);
    println!(
        "degenerate host (psi = 1):        base = {:.4} (no exponential gain)",
        flat.base
    );
}
