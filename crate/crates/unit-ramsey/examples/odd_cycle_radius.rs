//! The odd-cycle ball radius r_l three ways: the closed form, the star
//! polygon construction achieving it, and an independent numerical
//! minimization over closed unit chains.
//!
//! Run with: cargo run --example odd_cycle_radius

use unit_ramsey::bounds::{min_circumradius_chain, odd_cycle_constants, star_polygon_embedding};

fn main() {
    for l in [1usize, 2, 3, 6] {
        let c = odd_cycle_constants(l).unwrap();
        println!(
            "l={l}: r_l = {:.10}, upper base 1 + 1/r_l = {:.10}, eps_l = {:.10}",
            c.r_l, c.upper_base, c.eps_l
        );
    }

    for l in [1usize, 2, 6] {
        let (pts, residual) = star_polygon_embedding(l).unwrap();
        println!(
            "star polygon {{{}/{l}}}: {} points, max |chord - 1| = {residual:.2e}",
            2 * l + 1,
            pts.len()
        );
    }

    // The optimizer recovers r_l from random starts, in the plane and beyond
    // (extra dimensions do not help).
    for (m, dim) in [(3usize, 2usize), (5, 2), (5, 3), (7, 2), (7, 3)] {
        let l = (m - 1) / 2;
        let want = odd_cycle_constants(l).unwrap().r_l;
        let got = min_circumradius_chain(m, dim, 10, 0).unwrap();
        println!(
            "closed {m}-chain in R^{dim}: min max-norm = {:.7} (r_{l} = {want:.7}, residual {:.1e})",
            got.radius, got.residual
        );
    }
}
