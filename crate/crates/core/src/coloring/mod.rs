//! Proper colorings: greedy list coloring, peeling layers with backward
//! list coloring, and the spectral and function-graph palettes they give.

mod oracle;
mod peeling;

pub use oracle::{brute_force_chromatic, brute_force_independence, CHROMATIC_CAP, INDEPENDENCE_CAP};
pub use peeling::{backwards_list_color, peel_by_in_degree, peel_by_threshold, wilf_decay_rate, Peeling};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph, VertexSubset};
use crate::spectral::{self, snapped_floor, DEFAULT_TOL};

/// A finite list of admissible colors per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<usize>>) -> Self {
        for l in lists.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// `{0, ..., k−1}` at every vertex.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment { lists: vec![(0..k).collect(); n] }
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// A partial vertex coloring; uncolored vertices are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    colored_set: VertexSubset,
    palette_size: usize,
}

impl Coloring {
    pub fn from_colors(colors: Vec<Option<usize>>) -> Self {
        let n = colors.len();
        let mut colored_set = VertexSubset::empty(n);
        let mut used = BTreeSet::new();
        for (v, c) in colors.iter().enumerate() {
            if let Some(c) = c {
                colored_set.insert(v);
                used.insert(*c);
            }
        }
        Coloring { colors, colored_set, palette_size: used.len() }
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.colors
    }

    pub fn colored_set(&self) -> &VertexSubset {
        &self.colored_set
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// No edge between two colored vertices of the same color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.first_conflict(g).is_none()
    }

    pub fn first_conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().into_iter().find(|&(u, v)| {
            matches!((self.colors[u], self.colors[v]), (Some(a), Some(b)) if a == b)
        })
    }
}

/// Colors vertices in ascending order, each with the least color of its
/// list not already taken by a neighbor. Requires `deg(x) < |L(x)|`.
pub fn greedy_list_coloring(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    if lists.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) >= lists.list(v).len()) {
        return Err(Error::ListTooShort {
            vertex: v,
            list_len: lists.list(v).len(),
            degree: g.degree(v),
        });
    }
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    for v in 0..g.n() {
        let taken: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&w| colors[w]).collect();
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| !taken.contains(c))
            .expect("deg < |L| leaves a free color");
        colors[v] = Some(c);
    }
    Ok(Coloring::from_colors(colors))
}

/// Proper coloring with at most ⌊M(T)⌋ + 1 colors: peel at threshold
/// ⌊M(T)⌋, then color the layers backwards.
pub fn wilf_color(g: &Graph) -> Result<Coloring> {
    let (_, big_m) = spectral::extremes(&spectral::adjacency_spectrum(g)?)?;
    let t = snapped_floor(big_m, DEFAULT_TOL).max(0) as usize;
    let peeling = peel_by_threshold(g, t)?;
    backwards_list_color(g, &peeling, t + 1)
}

/// Proper coloring of the underlying graph of a digraph generated by `n_f`
/// maps with at most `2·n_f + 1` colors.
pub fn function_graph_color(d: &DirectedGraph) -> Result<Coloring> {
    let n_f = d.generator_count();
    if let Some(v) = (0..d.n()).find(|&v| d.out_degree(v) > n_f) {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} has out-degree {} > {n_f}",
            d.out_degree(v)
        )));
    }
    let peeling = peel_by_in_degree(d, n_f)?;
    backwards_list_color(&d.underlying(), &peeling, 2 * n_f + 1)
}

/// Proper coloring with at most ⌊M⌋ + 1 colors, assuming every induced
/// subgraph has a vertex of degree ≤ M. A residual violating that is
/// reported as [`Error::PeelingStuck`].
pub fn min_degree_peel_color(g: &Graph, m: f64) -> Result<Coloring> {
    if !(m.is_finite() && m >= 0.0) {
        return Err(Error::InvalidParameter(format!("degree bound {m} must be finite and >= 0")));
    }
    let t = m.floor() as usize;
    let peeling = peel_by_threshold(g, t)?;
    backwards_list_color(g, &peeling, t + 1)
}
