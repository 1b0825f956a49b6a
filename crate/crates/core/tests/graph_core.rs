mod common;

use pmpgraph::{Graph, Transport, VertexSubset};
use proptest::prelude::*;

fn subset(n: usize, mask: &[bool]) -> VertexSubset {
    VertexSubset::from_indices(n, (0..n).filter(|&v| mask[v])).unwrap()
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(g in common::graph(14)) {
        for u in 0..g.n() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
            }
        }
        let rebuilt = Graph::from_adjacency((0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn neighborhood_bound((g, mask) in common::graph_and_subset(14)) {
        let a = subset(g.n(), &mask);
        prop_assert!(g.neighborhood(&a).len() <= g.max_degree() * a.len());
    }

    #[test]
    fn invariance_iff_union_of_components((g, mask) in common::graph_and_subset(12)) {
        let a = subset(g.n(), &mask);
        let comps = g.components();
        let union_of_components = comps.iter().all(|c| c.is_subset(&a) || c.is_disjoint(&a));
        prop_assert_eq!(g.is_invariant(&a), union_of_components);
        prop_assert_eq!(g.closed_ball(&a) == a, union_of_components);
        // Any union of components is invariant.
        let mut u = VertexSubset::empty(g.n());
        for (i, c) in comps.iter().enumerate() {
            if mask[i % mask.len()] {
                u = u.union(c);
            }
        }
        prop_assert!(g.is_invariant(&u));
    }

    #[test]
    fn transport_residual(g in common::graph(20), weights in proptest::collection::vec(0.0f64..10.0, 400)) {
        let mut i = 0;
        let phi = Transport::from_fn(&g, |_, _| { i += 1; weights[i % weights.len()] }).unwrap();
        prop_assert!(g.verify_mass_transport(&phi).unwrap() <= 1e-12);
    }

    #[test]
    fn induced_subgraph_preserves_edges((g, mask) in common::graph_and_subset(12)) {
        let a = subset(g.n(), &mask);
        prop_assume!(!a.is_empty());
        let sub = g.induced_subgraph(&a).unwrap();
        let map = &sub.index_map;
        for i in 0..map.len() {
            for j in 0..map.len() {
                prop_assert_eq!(sub.graph.has_edge(i, j), g.has_edge(map[i], map[j]));
            }
        }
    }
}

#[test]
fn transport_rejects_non_edges() {
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    let mut phi = Transport::new();
    phi.set(0, 2, 1.0).unwrap();
    assert!(g.verify_mass_transport(&phi).is_err());
    assert!(phi.set(0, 1, -1.0).is_err());
}
