//! Ternary tuple utilities on [3]^N: 3-free index sets, restrictions, and the
//! equivalence x ~ y that compares restrictions position-free.
//!
//! Run with: cargo run --example ternary_tuples

use unit_ramsey::rng::Rng64;
use unit_ramsey::slices::{equivalent, TernaryTuple};

fn main() {
    let x = TernaryTuple::new(vec![2, 1, 3, 1, 3, 1]).unwrap();
    let y = TernaryTuple::new(vec![3, 2, 1, 3, 1, 1]).unwrap();
    let z = TernaryTuple::new(vec![3, 1, 3, 1, 1, 2]).unwrap();

    println!(
        "x = {:?}, I(x) = {:?}, x|I(x) = {:?}",
        x.digits(),
        x.index_set(),
        x.restrict(&x.index_set())
    );
    println!(
        "y = {:?}, I(y) = {:?}, y|I(y) = {:?}",
        y.digits(),
        y.index_set(),
        y.restrict(&y.index_set())
    );
    println!("x ~ y: {}", equivalent(&x, &y).unwrap());
    println!("x ~ z: {}", equivalent(&x, &z).unwrap());

    // Equivalence classes of [3]^3, by representative restriction.
    let mut classes: std::collections::BTreeMap<Vec<u8>, Vec<Vec<u8>>> = Default::default();
    for id in 0..27 {
        let digits: Vec<u8> = (0..3)
            .map(|i| (id / 3usize.pow(i as u32) % 3) as u8 + 1)
            .collect();
        let t = TernaryTuple::new(digits.clone()).unwrap();
        classes
            .entry(t.restrict(&t.index_set()))
            .or_default()
            .push(digits);
    }
    println!("\n[3]^3 splits into {} equivalence classes:", classes.len());
    for (repr, members) in &classes {
        println!("  {repr:?}: {} members", members.len());
    }

    // Sampled sanity: ~ is symmetric and equivalent tuples share |I|.
    let mut rng = Rng64::new(1);
    let mut checked = 0;
    for _ in 0..20_000 {
        let a: Vec<u8> = (0..6).map(|_| rng.below(3) as u8 + 1).collect();
        let b: Vec<u8> = (0..6).map(|_| rng.below(3) as u8 + 1).collect();
        let ta = TernaryTuple::new(a).unwrap();
        let tb = TernaryTuple::new(b).unwrap();
        let ab = equivalent(&ta, &tb).unwrap();
        assert_eq!(ab, equivalent(&tb, &ta).unwrap());
        if ab {
            assert_eq!(ta.index_set().len(), tb.index_set().len());
            checked += 1;
        }
    }
    println!("\nsampled {checked} equivalent pairs; symmetry and |I| agreement held");
}
