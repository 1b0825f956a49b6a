#![allow(dead_code)]

use pmpgraph::Graph;
use proptest::prelude::*;

/// Graph on `n` vertices from a bit per unordered pair, in (0,1), (0,2), ... order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Arbitrary graph with `1..=max_n` vertices.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Graph together with a vertex subset given as a membership mask.
pub fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, Vec<bool>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
    })
}
