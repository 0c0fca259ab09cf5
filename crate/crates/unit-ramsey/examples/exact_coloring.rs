//! Exact chromatic numbers, independence numbers, and the generalized
//! chromatic number (fewest colors leaving no monochromatic pattern copy).
//!
//! Run with: cargo run --example exact_coloring

use unit_ramsey::generators::{gen_standard, moser_spindle, Family};
use unit_ramsey::graph::{
    cartesian_product, chi_generalized, chromatic_number_with_certificate,
    independence_number_with_witness, DEFAULT_NODE_BUDGET,
};

fn main() {
    let spindle = moser_spindle();
    let (chi, cert) = chromatic_number_with_certificate(&spindle, DEFAULT_NODE_BUDGET).unwrap();
    println!("Moser spindle: chi = {chi}, certificate {:?}", cert.colors);
    assert!(cert.is_proper(&spindle));

    let (alpha, witness) = independence_number_with_witness(&spindle, DEFAULT_NODE_BUDGET).unwrap();
    println!("Moser spindle: alpha = {alpha}, witness {witness:?}");

    let k3 = gen_standard(Family::Complete(3)).unwrap();
    let rook = cartesian_product(&k3, &k3).unwrap();
    let p3 = gen_standard(Family::Path(3)).unwrap();
    let k2 = gen_standard(Family::Complete(2)).unwrap();

    // With H = K_2 the generalized chromatic number is the usual one.
    println!(
        "chi(K3 x K3)          = {}",
        chi_generalized(&rook, &k2, false).unwrap()
    );
    // Three diagonal classes avoid monochromatic paths on 3 vertices.
    println!(
        "chi_P3(K3 x K3)       = {}",
        chi_generalized(&rook, &p3, false).unwrap()
    );
    // No copy of K_3 in K_2 at all: one color suffices vacuously.
    let k2_host = gen_standard(Family::Complete(2)).unwrap();
    println!(
        "chi_K3(K2)            = {}",
        chi_generalized(&k2_host, &k3, false).unwrap()
    );

    for l in [5usize, 7, 9] {
        let c = gen_standard(Family::Cycle(l)).unwrap();
        let (chi, _) = chromatic_number_with_certificate(&c, DEFAULT_NODE_BUDGET).unwrap();
        let (alpha, _) = independence_number_with_witness(&c, DEFAULT_NODE_BUDGET).unwrap();
        println!("C{l}: chi = {chi}, alpha = {alpha}");
    }
}
