//! The digit-sum-mod-3 red/blue coloring of K_3^{square N} has no
//! monochromatic 4-cycle at any N; this checks every C_4 exhaustively for
//! small N and prints the census.
//!
//! Run with: cargo run --example mod3_coloring

use unit_ramsey::slices::mod3_c4_check;

fn main() {
    for n in 2..=6 {
        let census = mod3_c4_check(n).unwrap();
        println!(
            "N={}: {} C4 copies (= C({n},2)*9*3^{}), {} monochromatic, verdict {}",
            census.n,
            census.copies,
            n - 2,
            census.monochromatic,
            if census.verdict { "pass" } else { "FAIL" },
            n = census.n,
        );
        println!("   json: {}", serde_json::to_string(&census).unwrap());
    }
}
