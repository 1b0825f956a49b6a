use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph, VertexSubset};

use super::{greedy_list_coloring, Coloring, ListAssignment};

/// Disjoint layers A₀, A₁, … removed one after another from a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Peeling {
    pub layers: Vec<VertexSubset>,
    pub residual: VertexSubset,
    /// For each layer, `(vertex, degree into A_k ∪ A_{k+1} ∪ …)` at the
    /// moment the layer was removed.
    pub peel_degrees: Vec<Vec<(usize, usize)>>,
    /// `remaining[k]` vertices are left before layer `k` is removed;
    /// the last entry is the residual size.
    pub remaining: Vec<usize>,
}

impl Peeling {
    /// Largest degree into the not-yet-removed part recorded for any layer vertex.
    pub fn max_peel_degree(&self) -> usize {
        self.peel_degrees
            .iter()
            .flatten()
            .map(|&(_, d)| d)
            .max()
            .unwrap_or(0)
    }

    /// Ratios `remaining[k+1] / remaining[k]` for every step.
    pub fn decay_ratios(&self) -> Vec<f64> {
        self.remaining
            .windows(2)
            .map(|w| w[1] as f64 / w[0] as f64)
            .collect()
    }
}

/// Contraction rate r = (λ + s)/(λ + 1) with λ = `threshold` and s chosen
/// halfway between `M − λ` and 1, so that λ + s > M.
pub fn wilf_decay_rate(big_m: f64, threshold: usize) -> f64 {
    let lambda = threshold as f64;
    let s = ((big_m - lambda).max(0.0) + 1.0) / 2.0;
    (lambda + s) / (lambda + 1.0)
}

/// Repeatedly remove every remaining vertex whose degree into the
/// remaining graph is at most `t`.
pub fn peel_by_threshold(g: &Graph, t: usize) -> Result<Peeling> {
    peel(g, t, |v, alive| g.neighbors(v).iter().filter(|&&w| alive[w]).count())
}

/// Repeatedly remove every remaining vertex whose in-degree within the
/// remaining digraph is at most `t`. Recorded peel degrees refer to the
/// underlying undirected graph.
pub fn peel_by_in_degree(d: &DirectedGraph, t: usize) -> Result<Peeling> {
    let g = d.underlying();
    peel(&g, t, |v, alive| d.in_neighbors(v).iter().filter(|&&w| alive[w]).count())
}

fn peel(g: &Graph, t: usize, key_degree: impl Fn(usize, &[bool]) -> usize) -> Result<Peeling> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut left = n;
    let mut layers = Vec::new();
    let mut peel_degrees = Vec::new();
    let mut remaining = vec![n];
    while left > 0 {
        let layer: Vec<usize> = (0..n).filter(|&v| alive[v] && key_degree(v, &alive) <= t).collect();
        if layer.is_empty() {
            let residual: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            return Err(Error::PeelingStuck { threshold: t, residual });
        }
        let degrees = layer
            .iter()
            .map(|&v| (v, g.neighbors(v).iter().filter(|&&w| alive[w]).count()))
            .collect();
        for &v in &layer {
            alive[v] = false;
        }
        left -= layer.len();
        layers.push(VertexSubset::from_indices(n, layer)?);
        peel_degrees.push(degrees);
        remaining.push(left);
    }
    Ok(Peeling {
        layers,
        residual: VertexSubset::empty(n),
        peel_degrees,
        remaining,
    })
}

/// Color the last layer first; each earlier layer picks from the palette
/// minus the colors of its neighbors in later layers.
pub fn backwards_list_color(g: &Graph, p: &Peeling, palette: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    for layer in p.layers.iter().rev() {
        if layer.is_empty() {
            continue;
        }
        let sub = g.induced_subgraph(layer)?;
        let lists = sub
            .index_map
            .iter()
            .map(|&v| {
                let taken: BTreeSet<usize> =
                    g.neighbors(v).iter().filter_map(|&w| colors[w]).collect();
                (0..palette).filter(|c| !taken.contains(c)).collect()
            })
            .collect();
        let local = greedy_list_coloring(&sub.graph, &ListAssignment::new(lists)).map_err(|e| match e {
            Error::ListTooShort { vertex, list_len, degree } => Error::ListTooShort {
                vertex: sub.index_map[vertex],
                list_len,
                degree,
            },
            other => other,
        })?;
        for (i, &v) in sub.index_map.iter().enumerate() {
            colors[v] = local.color(i);
        }
    }
    Ok(Coloring::from_colors(colors))
}
