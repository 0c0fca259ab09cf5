//! Property tests for the structural invariants: product counting, copy
//! enumeration, coloring bounds, substitution arithmetic, tuple equivalence,
//! isometry invariance of ingestion, and witness soundness.

use proptest::prelude::*;
use unit_ramsey::arrow::{arrow_check, Engine};
use unit_ramsey::generators::{gamma_substitution, gen_standard, ingest_unit_distance, Family};
use unit_ramsey::graph::{
    cartesian_power, cartesian_product, chi_generalized, chromatic_number, find_copies,
    independence_number, Graph, PowerIndex,
};
use unit_ramsey::plane::{color_at, falsify, ConfigKind, PlaneScheme};
use unit_ramsey::slices::{equivalent, TernaryTuple};

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut k = 0u32;
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::build(n, &edges).unwrap()
    })
}

fn bipartite_strategy(max_side: usize) -> impl Strategy<Value = (Graph, Vec<u32>, Vec<u32>)> {
    (1..=max_side, 1..=max_side, any::<u64>()).prop_map(|(a, b, bits)| {
        let mut edges = Vec::new();
        let mut k = 0u32;
        for u in 0..a as u32 {
            for v in 0..b as u32 {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((u, a as u32 + v));
                }
                k += 1;
            }
        }
        let g = Graph::build(a + b, &edges).unwrap();
        let part_a: Vec<u32> = (0..a as u32).collect();
        let part_b: Vec<u32> = (a as u32..(a + b) as u32).collect();
        (g, part_a, part_b)
    })
}

fn ternary_strategy(len: usize) -> impl Strategy<Value = TernaryTuple> {
    proptest::collection::vec(1u8..=3, len).prop_map(|d| TernaryTuple::new(d).unwrap())
}

proptest! {
    #[test]
    fn product_edge_count_formula(g in graph_strategy(1, 8), h in graph_strategy(1, 8)) {
        let p = cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), g.n() * h.edge_count() + h.n() * g.edge_count());
    }

    #[test]
    fn power_is_iterated_product(g in graph_strategy(2, 4), n_pow in 2usize..=3) {
        let pow = cartesian_power(&g, n_pow).unwrap();
        let prod = cartesian_product(&cartesian_power(&g, n_pow - 1).unwrap(), &g).unwrap();
        let b = g.n();
        let relabel = |id: usize| -> u32 {
            let idx = PowerIndex::from_id(id, b, n_pow);
            let prev: usize = idx.digits[1..].iter().rev().fold(0, |acc, &d| acc * b + d as usize);
            (prev * b + idx.digits[0] as usize) as u32
        };
        let mut mapped: Vec<(u32, u32)> = pow
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b2) = (relabel(u as usize), relabel(v as usize));
                (a.min(b2), a.max(b2))
            })
            .collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped.as_slice(), prod.edges());
    }

    #[test]
    fn induced_copies_are_a_subset(host in graph_strategy(3, 7), which in 0usize..3) {
        let pattern = match which {
            0 => gen_standard(Family::Path(3)).unwrap(),
            1 => gen_standard(Family::Cycle(4)).unwrap(),
            _ => gen_standard(Family::Complete(3)).unwrap(),
        };
        if pattern.n() <= host.n() {
            let plain = find_copies(&host, &pattern, false, None).unwrap().sets;
            let induced = find_copies(&host, &pattern, true, None).unwrap().sets;
            prop_assert!(induced.iter().all(|s| plain.contains(s)));
        }
    }

    #[test]
    fn chi_generalized_with_k2_is_chromatic(g in graph_strategy(2, 8)) {
        let k2 = gen_standard(Family::Complete(2)).unwrap();
        prop_assert_eq!(chi_generalized(&g, &k2, false).unwrap(), chromatic_number(&g).unwrap());
    }

    #[test]
    fn arrow_k2_iff_chromatic_exceeds_r(g in graph_strategy(2, 7), r in 1u32..=3) {
        let k2 = gen_standard(Family::Complete(2)).unwrap();
        let v = arrow_check(&g, &[k2], r, false, Engine::Backtrack).unwrap();
        prop_assert_eq!(v.holds, chromatic_number(&g).unwrap() > r as usize);
    }

    #[test]
    fn bipartite_graphs_are_2_colorable_with_large_alpha((g, _, _) in bipartite_strategy(4)) {
        prop_assert!(chromatic_number(&g).unwrap() <= 2);
        prop_assert!(independence_number(&g).unwrap() * 2 >= g.n());
    }

    #[test]
    fn substitution_count_arithmetic(
        (gamma, part_a, part_b) in bipartite_strategy(3),
        which in 0usize..3,
    ) {
        let h = match which {
            0 => gen_standard(Family::Complete(3)).unwrap(),
            1 => gen_standard(Family::Cycle(4)).unwrap(),
            _ => gen_standard(Family::Cycle(5)).unwrap(),
        };
        let sub = gamma_substitution(&gamma, &part_a, &part_b, &h, 0, 1).unwrap();
        prop_assert_eq!(sub.n(), part_a.len() + part_b.len() + gamma.edge_count() * (h.n() - 2));
        prop_assert_eq!(sub.edge_count(), gamma.edge_count() * h.edge_count());
    }

    #[test]
    fn ternary_equivalence_is_an_equivalence(
        x in ternary_strategy(6),
        y in ternary_strategy(6),
        z in ternary_strategy(6),
    ) {
        prop_assert!(equivalent(&x, &x).unwrap());
        prop_assert_eq!(equivalent(&x, &y).unwrap(), equivalent(&y, &x).unwrap());
        if equivalent(&x, &y).unwrap() && equivalent(&y, &z).unwrap() {
            prop_assert!(equivalent(&x, &z).unwrap());
        }
        if equivalent(&x, &y).unwrap() && x != y {
            prop_assert_eq!(x.index_set().len(), y.index_set().len());
            prop_assert!(!x.index_set().is_empty());
        }
    }

    #[test]
    fn ingestion_is_isometry_invariant(
        seed_pts in proptest::collection::vec((-20i32..20, -20i32..20), 3..6),
        angle in 0.0f64..std::f64::consts::TAU,
        shift in (-5.0f64..5.0, -5.0f64..5.0),
    ) {
        // Quarter-integer grid points: distances stay far from the 1e-9 band.
        let pts: Vec<Vec<f64>> = seed_pts
            .iter()
            .map(|&(x, y)| vec![x as f64 / 4.0, y as f64 / 4.0])
            .collect();
        let (g1, _) = ingest_unit_distance(&pts, 1e-9).unwrap();
        let moved: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| {
                vec![
                    p[0] * angle.cos() - p[1] * angle.sin() + shift.0,
                    p[0] * angle.sin() + p[1] * angle.cos() + shift.1,
                ]
            })
            .collect();
        let (g2, _) = ingest_unit_distance(&moved, 1e-7).unwrap();
        prop_assert_eq!(g1.edges(), g2.edges());
    }

    #[test]
    fn graph_json_roundtrip(g in graph_strategy(1, 8)) {
        let back = Graph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(back, g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn arrow_is_monotone_on_nested_cycle_families(g in graph_strategy(3, 6), r in 2u32..=3) {
        // {C3} ⊆ {C3,C5} ⊆ {C3,C5,C7} as containment-closed families.
        let mut family = Vec::new();
        let mut previous_held = false;
        for l in [3usize, 5, 7] {
            family.push(gen_standard(Family::Cycle(l)).unwrap());
            let v = arrow_check(&g, &family, r, false, Engine::Backtrack).unwrap();
            if previous_held {
                prop_assert!(v.holds, "arrow lost by enlarging the family");
            }
            previous_held = v.holds;
        }
    }

    #[test]
    fn falsify_witnesses_are_sound(seed in any::<u64>(), which in 0usize..3) {
        let (scheme, kind) = match which {
            0 => (PlaneScheme::strips(0.6).unwrap(), ConfigKind::Path3),
            1 => (PlaneScheme::square4(), ConfigKind::Triangle),
            _ => (PlaneScheme::staircase(2.5).unwrap(), ConfigKind::Rhombus),
        };
        if let Some((_, w)) = falsify(&scheme, kind, 400, seed) {
            prop_assert!(w.distances_ok());
            let c0 = color_at(&scheme, w.points[0].0, w.points[0].1);
            prop_assert!(w.points.iter().all(|&(x, y)| color_at(&scheme, x, y) == c0));
        }
    }
}
