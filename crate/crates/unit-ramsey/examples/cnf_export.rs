//! CNF encoding of arrow relations and the internal DPLL reference solver.
//! The formula is satisfiable exactly when the arrow relation fails, so
//! exported DIMACS files can be handed to any external solver.
//!
//! Run with: cargo run --example cnf_export

use unit_ramsey::arrow::{dpll_solve, encode_cnf, to_dimacs, SatOutcome};
use unit_ramsey::generators::{gen_standard, moser_spindle, Family};

fn main() {
    let k2 = gen_standard(Family::Complete(2)).unwrap();

    for (name, g) in [
        ("K3", gen_standard(Family::Complete(3)).unwrap()),
        ("C4", gen_standard(Family::Cycle(4)).unwrap()),
        ("C5", gen_standard(Family::Cycle(5)).unwrap()),
        ("Q3", gen_standard(Family::Hypercube(3)).unwrap()),
    ] {
        let f = encode_cnf(&g, std::slice::from_ref(&k2), 2, false).unwrap();
        let outcome = dpll_solve(&f).unwrap();
        println!(
            "{name} ->2 K2 encoding: {} vars, {} clauses, {}",
            f.num_vars,
            f.clauses.len(),
            match outcome {
                SatOutcome::Sat(_) => "SAT (arrow fails: a proper 2-coloring exists)",
                SatOutcome::Unsat => "UNSAT (arrow holds: chi > 2)",
            }
        );
    }

    // Dump one formula in DIMACS form, variable map included.
    let spindle = moser_spindle();
    let family: Vec<_> = [3usize, 5, 7]
        .into_iter()
        .map(|l| gen_standard(Family::Cycle(l)).unwrap())
        .collect();
    let f = encode_cnf(&spindle, &family, 2, false).unwrap();
    let dimacs = to_dimacs(&f);
    let head: Vec<&str> = dimacs.lines().take(4).collect();
    let tail: Vec<&str> = dimacs.lines().skip(f.num_vars).take(3).collect();
    println!("\nspindle odd-cycle encoding, first lines:");
    for line in head {
        println!("  {line}");
    }
    println!("  ...");
    for line in tail {
        println!("  {line}");
    }
    match dpll_solve(&f).unwrap() {
        SatOutcome::Sat(_) => println!("=> SAT: an odd-cycle-free 2-coloring exists"),
        SatOutcome::Unsat => println!("=> UNSAT"),
    }
}
