//! Finite simple graphs with the uniform vertex measure, vertex subsets,
//! and edge-supported transports.

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertices of a graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    bits: FixedBitSet,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        VertexSubset { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSubset { bits }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in indices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    /// Subset of `0..n` whose members are the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n.min(64) {
            if mask >> v & 1 == 1 {
                s.bits.insert(v);
            }
        }
        s
    }

    /// Size of the ambient vertex set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// µ(A) = |A| / n.
    pub fn measure(&self) -> f64 {
        if self.universe() == 0 {
            0.0
        } else {
            self.len() as f64 / self.universe() as f64
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSubset { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSubset { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSubset { bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSubset { bits }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// Finite simple undirected graph on `0..n`; each vertex carries mass `1/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order is irrelevant, but
    /// self-loops, repeated edges and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Builds a graph from per-vertex neighbor lists, checking symmetry.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for (i, &w) in list.iter().enumerate() {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
                if w == v {
                    return Err(Error::SelfLoop(v));
                }
                if i > 0 && list[i - 1] == w {
                    return Err(Error::DuplicateEdge(v.min(w), v.max(w)));
                }
            }
        }
        for v in 0..n {
            for &w in &adj[v] {
                if adj[w].binary_search(&v).is_err() {
                    return Err(Error::Asymmetric(v, w));
                }
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Graph on `0..n` whose adjacency is given by bitmasks (n ≤ 64).
    pub fn from_masks(masks: &[u64]) -> Result<Self> {
        let adj = masks
            .iter()
            .map(|&m| (0..64).filter(|&b| m >> b & 1 == 1).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Graph { adj, max_degree }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.max_degree;
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Neighbor sets as bitmasks; only valid for `n ≤ 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::CapExceeded { what: "bitmask adjacency", n: self.n(), cap: 64 });
        }
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect())
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let total: usize = self.adj.iter().map(Vec::len).sum();
        DegreeStats {
            min: self.min_degree(),
            max: self.max_degree,
            avg: total as f64 / self.n() as f64,
        }
    }

    /// N(A): every vertex with at least one neighbor in `a`.
    pub fn neighborhood(&self, a: &VertexSubset) -> VertexSubset {
        let mut out = VertexSubset::empty(self.n());
        for v in a.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    /// B₁(A) = A ∪ N(A).
    pub fn closed_ball(&self, a: &VertexSubset) -> VertexSubset {
        a.union(&self.neighborhood(a))
    }

    /// True iff `a` is a union of connected components.
    pub fn is_invariant(&self, a: &VertexSubset) -> bool {
        self.components()
            .iter()
            .all(|c| c.is_subset(a) || c.is_disjoint(a))
    }

    pub fn induced_subgraph(&self, a: &VertexSubset) -> Result<InducedSubgraph> {
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        let index_map = a.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in index_map.iter().enumerate() {
            position[v] = i;
        }
        let adj = index_map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| position[w] != usize::MAX)
                    .map(|&w| position[w])
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph { graph: Self::from_sorted_adjacency(adj), index_map })
    }

    /// Connected components, ordered by their least vertex.
    pub fn components(&self) -> Vec<VertexSubset> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSubset::empty(n);
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// |Σ out φ − Σ in φ| / n for an edge-supported transport.
    pub fn verify_mass_transport(&self, phi: &Transport) -> Result<f64> {
        let totals = self.transport_totals(phi)?;
        Ok((totals.out.iter().sum::<f64>() - totals.inflow.iter().sum::<f64>()).abs()
            / self.n() as f64)
    }

    /// Per-vertex outflow and inflow of an edge-supported transport.
    pub fn transport_totals(&self, phi: &Transport) -> Result<TransportTotals> {
        let n = self.n();
        let mut out = vec![0.0; n];
        let mut inflow = vec![0.0; n];
        for (&(x, y), &w) in &phi.weights {
            if !self.has_edge(x, y) {
                return Err(Error::NonEdgeTransport(x, y));
            }
            out[x] += w;
            inflow[y] += w;
        }
        Ok(TransportTotals { out, inflow })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub avg: f64,
}

/// An induced subgraph relabeled to `0..|A|`; `index_map[i]` is the
/// original vertex of new vertex `i`.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub index_map: Vec<usize>,
}

/// Nonnegative weights on ordered pairs of adjacent vertices.
#[derive(Debug, Clone, Default)]
pub struct Transport {
    weights: BTreeMap<(usize, usize), f64>,
}

impl Transport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets φ(x, y). Zero weights are dropped.
    pub fn set(&mut self, x: usize, y: usize, w: f64) -> Result<()> {
        if !(w.is_finite() && w >= 0.0) {
            return Err(Error::BadWeight(x, y));
        }
        if w == 0.0 {
            self.weights.remove(&(x, y));
        } else {
            self.weights.insert((x, y), w);
        }
        Ok(())
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.weights.get(&(x, y)).copied().unwrap_or(0.0)
    }

    /// Transport given by a weight function on every directed edge of `g`.
    pub fn from_fn(g: &Graph, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut t = Transport::new();
        for x in 0..g.n() {
            for &y in g.neighbors(x) {
                t.set(x, y, f(x, y))?;
            }
        }
        Ok(t)
    }
}

#[derive(Debug, Clone)]
pub struct TransportTotals {
    pub out: Vec<f64>,
    pub inflow: Vec<f64>,
}

/// Finite directed graph, optionally remembering the maps that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    functions: Option<Vec<Vec<usize>>>,
}

impl DirectedGraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut out_edges = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out_edges[u].push(v);
        }
        for (u, list) in out_edges.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0]));
            }
        }
        Ok(Self::with_out_edges(out_edges, None))
    }

    /// Arcs `x → f(x)` for every map `f` and every `x` with `f(x) ≠ x`.
    pub fn from_functions(n: usize, maps: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut out_edges = vec![Vec::new(); n];
        for map in &maps {
            if map.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "map has length {} but there are {n} vertices",
                    map.len()
                )));
            }
            for (x, &y) in map.iter().enumerate() {
                if y >= n {
                    return Err(Error::VertexOutOfRange { vertex: y, n });
                }
                if y != x {
                    out_edges[x].push(y);
                }
            }
        }
        for list in out_edges.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::with_out_edges(out_edges, Some(maps)))
    }

    fn with_out_edges(out_edges: Vec<Vec<usize>>, functions: Option<Vec<Vec<usize>>>) -> Self {
        let mut in_edges = vec![Vec::new(); out_edges.len()];
        for (u, list) in out_edges.iter().enumerate() {
            for &v in list {
                in_edges[v].push(u);
            }
        }
        DirectedGraph { out_edges, in_edges, functions }
    }

    pub fn n(&self) -> usize {
        self.out_edges.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    pub fn functions(&self) -> Option<&[Vec<usize>]> {
        self.functions.as_deref()
    }

    /// Number of generating maps, or the maximum out-degree when the graph
    /// was not built from maps.
    pub fn generator_count(&self) -> usize {
        match &self.functions {
            Some(f) => f.len(),
            None => (0..self.n()).map(|v| self.out_degree(v)).max().unwrap_or(0),
        }
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.out_edges.iter().enumerate() {
            out.extend(list.iter().map(|&v| (u, v)));
        }
        out
    }

    /// Forget orientation and merge antiparallel arcs.
    pub fn underlying(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.out_edges.iter().enumerate() {
            for &v in list {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph::from_sorted_adjacency(adj)
    }
}
