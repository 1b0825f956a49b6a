//! Constructors for the graphs and graph families used throughout the crate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph};

const PAIRING_ATTEMPTS: usize = 1000;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Graph::from_edges(n, &edges)
}

/// K_{a,b}: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite graph needs a, b >= 1, got ({a}, {b})"
        )));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        edges.extend((a..a + b).map(|v| (u, v)));
    }
    Graph::from_edges(a + b, &edges)
}

/// Star K_{1,k} with center 0.
pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Petersen graph: outer cycle `0..5`, spokes `i to i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are valid")
}

/// Disjoint union, with `h` relabeled after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    Graph::from_edges(off + h.n(), &edges).expect("union of valid graphs is valid")
}

/// Replace every edge of a regular graph by a path of length two.
///
/// Original vertices keep their labels; the vertex for the `i`-th edge (in
/// lexicographic order) is `n + i`. The result is bipartite and
/// (2, d)-biregular.
pub fn subdivide(g: &Graph) -> Result<Graph> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if d == 0 {
        return Err(Error::Edgeless);
    }
    let n = g.n();
    let old = g.edges();
    let mut edges = Vec::with_capacity(2 * old.len());
    for (i, &(u, v)) in old.iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    Graph::from_edges(n + old.len(), &edges)
}

/// The tournament on Z/7 generated by x ↦ x+1, x+2, x+4.
pub fn paley_tournament() -> DirectedGraph {
    let maps = [1, 2, 4]
        .iter()
        .map(|&s| (0..7).map(|x| (x + s) % 7).collect())
        .collect();
    DirectedGraph::from_functions(7, maps).expect("paley maps are total on Z/7")
}

pub fn function_graph(maps: Vec<Vec<usize>>) -> Result<DirectedGraph> {
    let n = maps.first().map(Vec::len).ok_or_else(|| {
        Error::InvalidParameter("need at least one map to fix the vertex count".into())
    })?;
    DirectedGraph::from_functions(n, maps)
}

/// The two unit shifts on the `rows × cols` torus, as maps on `0..rows*cols`.
pub fn torus_shifts(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    let idx = |r: usize, c: usize| r * cols + c;
    let right = (0..rows * cols).map(|x| idx(x / cols, (x % cols + 1) % cols)).collect();
    let down = (0..rows * cols).map(|x| idx((x / cols + 1) % rows, x % cols)).collect();
    vec![right, down]
}

/// Uniform `d`-regular graph by the pairing model, resampling whenever a
/// loop or a repeated edge appears.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Err(Error::Infeasible { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut adj = vec![Vec::with_capacity(d); n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'attempt;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        return Graph::from_adjacency(adj);
    }
    Err(Error::RejectionBudget(PAIRING_ATTEMPTS))
}

/// Erdős–Rényi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

type Generator = Box<dyn Fn(usize) -> Result<Graph> + Send + Sync>;

/// An indexed sequence of graphs with a common degree bound.
pub struct GraphFamily {
    pub name: String,
    pub degree_bound: usize,
    index_set: Vec<usize>,
    generator: Generator,
}

impl GraphFamily {
    pub fn new(
        name: impl Into<String>,
        degree_bound: usize,
        mut index_set: Vec<usize>,
        generator: impl Fn(usize) -> Result<Graph> + Send + Sync + 'static,
    ) -> Self {
        index_set.sort_unstable();
        index_set.dedup();
        GraphFamily { name: name.into(), degree_bound, index_set, generator: Box::new(generator) }
    }

    /// Cycles C_k for k = 3, 4, ..., max_index.
    pub fn cycles(max_index: usize) -> Self {
        Self::new("cycle", 2, (3..=max_index).collect(), cycle)
    }

    /// The same graph at every index in `1..=len`.
    pub fn constant(name: impl Into<String>, g: Graph, len: usize) -> Self {
        let d = g.max_degree();
        Self::new(name, d, (1..=len).collect(), move |_| Ok(g.clone()))
    }

    /// `random_regular(k, d, seed + k)` at each index `k`.
    pub fn random_regular(d: usize, seed: u64, index_set: Vec<usize>) -> Self {
        Self::new(format!("random-regular-{d}"), d, index_set, move |k| {
            random_regular(k, d, seed.wrapping_add(k as u64))
        })
    }

    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    pub fn get(&self, k: usize) -> Result<Graph> {
        if self.index_set.binary_search(&k).is_err() {
            return Err(Error::InvalidParameter(format!("{k} is not an index of {}", self.name)));
        }
        (self.generator)(k)
    }

    /// Indices up to and including `max_index`.
    pub fn indices_up_to(&self, max_index: usize) -> impl Iterator<Item = usize> + '_ {
        self.index_set.iter().copied().take_while(move |&k| k <= max_index)
    }
}

impl std::fmt::Debug for GraphFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GraphFamily")
            .field("name", &self.name)
            .field("degree_bound", &self.degree_bound)
            .field("index_set", &self.index_set)
            .finish()
    }
}
