//! Arrow relations G ->^r {H_1..H_m}: both decision engines, counterexample
//! certificates, and the least monochromatic odd cycle length.
//!
//! Run with: cargo run --example arrow_relations

use unit_ramsey::arrow::{arrow_check, contains_mono, mono_odd_cycle_bound, Engine};
use unit_ramsey::generators::{gen_standard, moser_spindle, Family};
use unit_ramsey::graph::cartesian_product;

fn main() {
    let k3 = gen_standard(Family::Complete(3)).unwrap();
    let rook = cartesian_product(&k3, &k3).unwrap();
    let p3 = gen_standard(Family::Path(3)).unwrap();

    // Every 2-coloring of K3 x K3 has a monochromatic path on 3 vertices.
    for engine in [Engine::Backtrack, Engine::Cnf] {
        let v = arrow_check(&rook, std::slice::from_ref(&p3), 2, false, engine).unwrap();
        println!(
            "K3xK3 ->2 P3 [{}]: holds={} ({} copies, {} nodes)",
            v.engine, v.holds, v.copies_considered, v.nodes
        );
    }

    // Three colors admit a counterexample; the certificate re-checks clean.
    let v = arrow_check(
        &rook,
        std::slice::from_ref(&p3),
        3,
        false,
        Engine::Backtrack,
    )
    .unwrap();
    let cert = v.certificate.expect("fails with 3 colors");
    println!(
        "K3xK3 ->3 P3: holds={} certificate={:?}",
        v.holds, cert.colors
    );
    assert_eq!(contains_mono(&rook, &[p3], &cert, false).unwrap(), None);

    // The Moser spindle splits into two classes with no odd cycle at all.
    let spindle = moser_spindle();
    let family: Vec<_> = [3usize, 5, 7]
        .into_iter()
        .map(|l| gen_standard(Family::Cycle(l)).unwrap())
        .collect();
    let v = arrow_check(&spindle, &family, 2, false, Engine::Backtrack).unwrap();
    println!(
        "spindle ->2 {{C3,C5,C7}}: holds={} certificate={:?}",
        v.holds,
        v.certificate.as_ref().map(|c| &c.colors)
    );

    let (bound, _) = mono_odd_cycle_bound(&spindle, 2, 7).unwrap();
    println!("least odd L with spindle ->2 {{C3..C_L}}, L<=7: {bound:?}");

    // K5 2-colored always has a monochromatic triangle (pigeonhole).
    let k5 = gen_standard(Family::Complete(5)).unwrap();
    let (bound, _) = mono_odd_cycle_bound(&k5, 2, 5).unwrap();
    println!("least odd L with K5 ->2 {{C3..C_L}}, L<=5: {bound:?}");
}
