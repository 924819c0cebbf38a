mod common;

use common::*;
use immerse_core::graph::{named, parse_graph6, serialize_graph6};
use immerse_core::solvers::*;
use immerse_core::{Budget, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

#[test]
fn exhaustive_small_graphs_agree_with_brute_force() {
    for n in 0..=5 {
        for g in every_graph(n) {
            let (chi, c) = chromatic_number(&g, Budget::UNLIMITED).unwrap();
            assert_eq!(chi, naive_chromatic_number(&g), "{g:?}");
            assert!(c.is_proper(&g));
            assert_eq!(
                clique_number(&g, Budget::UNLIMITED).unwrap().0,
                naive_clique_number(&g)
            );
            assert_eq!(
                independence_number(&g, Budget::UNLIMITED).unwrap().0,
                naive_independence_number(&g)
            );
            assert_eq!(maximum_matching(&g).len(), naive_matching_size(&g));
            if n >= 3 {
                assert_eq!(
                    is_hamiltonian(&g, Budget::UNLIMITED).unwrap().is_some(),
                    naive_hamiltonian(&g)
                );
            }
        }
    }
}

#[test]
fn named_values() {
    let p = named::petersen();
    assert_eq!(chromatic_number(&p, Budget::UNLIMITED).unwrap().0, 3);
    assert_eq!(independence_number(&p, Budget::UNLIMITED).unwrap().0, 4);
    assert_eq!(maximum_matching(&p).len(), 5);
    assert!(is_hamiltonian(&p, Budget::UNLIMITED).unwrap().is_none());
    let c7bar = named::cycle(7).complement();
    assert_eq!(chromatic_number(&c7bar, Budget::UNLIMITED).unwrap().0, 4);
    assert_eq!(independence_number(&c7bar, Budget::UNLIMITED).unwrap().0, 2);
    assert_eq!(clique_number(&c7bar, Budget::UNLIMITED).unwrap().0, 3);
}

#[test]
fn all_chromatic_routes_agree_on_mid_sized_graphs() {
    for seed in 0..40u64 {
        let n = 8 + (seed % 6) as usize;
        let g = immerse_core::lab::alpha2_random(n, seed).unwrap();
        let h = g.complement();
        for x in [&g, &h] {
            let a = chromatic_number(x, Budget::UNLIMITED).unwrap().0;
            let b = chromatic_branch_and_bound(x, Budget::UNLIMITED).unwrap();
            let c = chromatic_exhaustive(x, Budget::UNLIMITED).unwrap();
            assert!(b.is_proper(x) && c.is_proper(x));
            assert_eq!((a, a), (b.k(), c.k()));
        }
    }
}

#[test]
fn one_factorizations() {
    assert!(one_factorization(1).is_err());
    for s in 2..=12 {
        let f = one_factorization(s).unwrap();
        assert!(f.is_proper());
        let colors = if s % 2 == 0 { s - 1 } else { s };
        assert_eq!(f.num_colors(), colors, "s = {s}");
        let mut total = 0;
        for c in 1..=colors {
            assert_eq!(f.class(c).len(), s / 2);
            total += f.class(c).len();
        }
        assert_eq!(total, s * (s - 1) / 2);
        if s % 2 == 1 {
            // every vertex misses exactly one colour
            for v in 0..s {
                let seen: std::collections::BTreeSet<usize> =
                    (0..s).filter(|&w| w != v).map(|w| f.color(v, w)).collect();
                assert_eq!(seen.len(), s - 1);
            }
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = serialize_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn clique_and_independence_are_dual(g in arb_graph(14)) {
        let (w, clique) = clique_number(&g, Budget::UNLIMITED).unwrap();
        let (a, _) = independence_number(&g.complement(), Budget::UNLIMITED).unwrap();
        prop_assert_eq!(w, a);
        prop_assert_eq!(clique.len(), w);
        let mask = clique.iter().fold(0u64, |m, &v| m | 1 << v);
        prop_assert!(g.is_clique(mask));
    }

    #[test]
    fn chromatic_bounds(g in arb_graph(11)) {
        let (chi, c) = chromatic_number(&g, Budget::UNLIMITED).unwrap();
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.k(), chi);
        let w = clique_number(&g, Budget::UNLIMITED).unwrap().0;
        prop_assert!(w <= chi);
        prop_assert!(chi <= greedy_largest_first(&g).k());
        prop_assert!(chi <= g.max_degree().map_or(0, |d| d + 1));
    }

    #[test]
    fn matching_is_a_matching(g in arb_graph(16)) {
        let m = maximum_matching(&g);
        let mut seen = 0u64;
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(seen >> u & 1 == 0 && seen >> v & 1 == 0);
            seen |= 1 << u | 1 << v;
        }
        if g.n() <= 10 {
            prop_assert_eq!(m.len(), naive_matching_size(&g));
        }
    }

    #[test]
    fn hamiltonian_cycles_are_cycles(g in arb_graph(9)) {
        prop_assume!(g.n() >= 3);
        match is_hamiltonian(&g, Budget::UNLIMITED).unwrap() {
            Some(c) => {
                prop_assert_eq!(c.len(), g.n());
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            None => prop_assert!(!naive_hamiltonian(&g)),
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }
}
