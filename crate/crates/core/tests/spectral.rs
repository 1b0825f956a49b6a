mod common;

use pmpgraph::coloring::brute_force_independence;
use pmpgraph::enumerate::connected_regular_graphs;
use pmpgraph::spectral::{self, adjacency_spectrum, laplacian_spectrum};
use pmpgraph::VertexSubset;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn degree_sandwich(g in common::graph(14)) {
        let b = spectral::bounds(&g).unwrap();
        let d = g.max_degree() as f64;
        prop_assert!(b.m <= b.avg_degree + 1e-9 && b.avg_degree <= b.big_m + 1e-9);
        prop_assert!(d.sqrt() <= b.big_m + 1e-9 && b.big_m <= d + 1e-9);
        if g.edge_count() > 0 {
            prop_assert!(b.m < 0.0);
        }
    }

    #[test]
    fn antidiagonal_is_spectrum_and_its_negative(g in common::graph(12)) {
        let s = adjacency_spectrum(&g).unwrap();
        let anti = spectral::antidiagonal_spectrum(&g).unwrap();
        prop_assert!(anti.max_deviation(&s.union(&s.negated())).unwrap() <= 1e-9);
    }

    #[test]
    fn block_inequality((g, owner) in common::graph(20).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0usize..5, n))
    })) {
        let n = g.n();
        let k = owner.iter().max().unwrap() + 1;
        let parts: Vec<VertexSubset> = (0..k)
            .map(|i| VertexSubset::from_indices(n, (0..n).filter(|&v| owner[v] == i)).unwrap())
            .collect();
        let b = spectral::block_extremes(&g, &parts).unwrap();
        prop_assert!(b.lhs <= b.rhs + 1e-9, "{} > {}", b.lhs, b.rhs);
        prop_assert!(b.parts.iter().all(|p| p.1 <= b.big_m + 1e-9));
    }
}

#[test]
fn regular_laplacian_duality() {
    let mut pool: Vec<_> = (2..=9).flat_map(|n| connected_regular_graphs(n).unwrap()).collect();
    pool.push(pmpgraph::generators::random_regular(40, 3, 2).unwrap());
    for g in pool {
        let d = g.regular_degree().unwrap() as f64;
        let dual = adjacency_spectrum(&g).unwrap().reflected(d);
        let lap = laplacian_spectrum(&g).unwrap();
        assert!(lap.max_deviation(&dual).unwrap() <= 1e-9);
    }
}

#[test]
fn regular_independence_bound() {
    for n in 2..=8 {
        for g in connected_regular_graphs(n).unwrap() {
            let b = spectral::bounds(&g).unwrap();
            let alpha = brute_force_independence(&g).unwrap() as f64 / n as f64;
            assert!(alpha <= b.independence_bound.unwrap() + 1e-9, "{:?}", g.edges());
        }
    }
}

#[test]
fn spectral_gap_positive_on_connected_regular() {
    for n in 2..=9 {
        for g in connected_regular_graphs(n).unwrap() {
            assert!(spectral::spectral_gap(&g).unwrap() > 0.0);
        }
    }
}
