mod common;

use pmpgraph::coloring::*;
use pmpgraph::enumerate::graphs;
use pmpgraph::generators::{function_graph, paley_tournament};
use pmpgraph::spectral::{self, snapped_floor, DEFAULT_TOL};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn peeling_exhausts_and_layers_decay() {
    let mut runs = 0;
    for n in 1..=7 {
        for g in graphs(n).unwrap() {
            let big_m = spectral::bounds(&g).unwrap().big_m;
            let t = snapped_floor(big_m, DEFAULT_TOL) as usize;
            let p = peel_by_threshold(&g, t).unwrap();
            assert!(p.residual.is_empty(), "residual on {:?}", g.edges());
            assert!(p.max_peel_degree() <= t);
            let r = wilf_decay_rate(big_m, t);
            assert!(r < 1.0 || g.edge_count() == 0 && r <= 1.0);
            for w in p.remaining.windows(2) {
                assert!(w[1] as f64 <= r * w[0] as f64 + 1e-12, "{w:?} r = {r} on {:?}", g.edges());
            }
            let c = backwards_list_color(&g, &p, t + 1).unwrap();
            assert!(c.is_proper(&g) && c.is_total());
            assert!(brute_force_chromatic(&g).unwrap() <= t + 1);
            runs += 1;
        }
    }
    assert_eq!(runs, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

#[test]
fn function_graph_palettes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let nf = rng.gen_range(1..=3);
        let maps = (0..nf).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
        let d = function_graph(maps).unwrap();
        let c = function_graph_color(&d).unwrap();
        assert!(c.is_proper(&d.underlying()) && c.is_total());
        assert!(c.palette_size() <= 2 * nf + 1);
    }
    let c = function_graph_color(&paley_tournament()).unwrap();
    assert_eq!(c.palette_size(), 7);
}

proptest! {
    #[test]
    fn colorings_are_proper(g in common::graph(14)) {
        let b = spectral::bounds(&g).unwrap();
        let c = wilf_color(&g).unwrap();
        prop_assert!(c.is_proper(&g) && c.is_total());
        prop_assert!(c.palette_size() <= b.wilf);

        let greedy = greedy_list_coloring(&g, &ListAssignment::uniform(g.n(), g.max_degree() + 1)).unwrap();
        prop_assert!(greedy.is_proper(&g) && greedy.palette_size() <= g.max_degree() + 1);

        let peel = min_degree_peel_color(&g, g.max_degree() as f64).unwrap();
        prop_assert!(peel.is_proper(&g) && peel.is_total());
    }

    #[test]
    fn peeling_below_degeneracy_gets_stuck(n in 3usize..9) {
        let k = pmpgraph::generators::complete(n).unwrap();
        let stuck = matches!(min_degree_peel_color(&k, (n - 2) as f64), Err(pmpgraph::Error::PeelingStuck { .. }));
        prop_assert!(stuck);
    }
}
