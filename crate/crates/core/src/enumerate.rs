//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `k` vertices are produced by adding a vertex, joined to every
//! possible subset, to each representative on `k − 1` vertices; duplicates
//! are removed with a canonical form computed by partition refinement and
//! individualization. Every isomorphism class on `k` vertices arises this
//! way because deleting any vertex lands in some class on `k − 1` vertices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by the enumerators.
pub const ENUMERATION_CAP: usize = 10;

type Masks = Vec<u16>;

/// Canonical code of a graph given by adjacency bitmasks: the largest
/// upper-triangle code over all leaves of the refinement tree.
pub fn canonical_code(adj: &[u16]) -> u128 {
    let n = adj.len();
    let cells = refine(adj, vec![(0..n as u8).collect()]);
    let mut best = 0u128;
    let mut found = false;
    search(adj, cells, &mut best, &mut found);
    best
}

fn cell_mask(cell: &[u8]) -> u16 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Split cells by neighbor counts into each splitter cell until stable.
fn refine(adj: &[u16], mut cells: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cell_mask(&cells[s]);
            let mut next = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, u8)> =
                    cell.iter().map(|&v| ((adj[v as usize] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut group = vec![keyed[0].1];
                for w in keyed.windows(2) {
                    if w[1].0 != w[0].0 {
                        next.push(std::mem::take(&mut group));
                        split = true;
                    }
                    group.push(w[1].1);
                }
                next.push(group);
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

fn search(adj: &[u16], cells: Vec<Vec<u8>>, best: &mut u128, found: &mut bool) {
    let Some(i) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0] as usize).collect();
        let code = leaf_code(adj, &order);
        if !*found || code > *best {
            *best = code;
            *found = true;
        }
        return;
    };
    let mut tried: Vec<u8> = Vec::new();
    for &v in &cells[i] {
        // Swapping two twins is an automorphism fixing the partition, so
        // both choices lead to the same leaves.
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..i]);
        next.push(vec![v]);
        next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[i + 1..]);
        search(adj, refine(adj, next), best, found);
    }
}

fn twins(adj: &[u16], u: u8, v: u8) -> bool {
    let both = !(1u16 << u | 1u16 << v);
    adj[u as usize] & both == adj[v as usize] & both
}

fn leaf_code(adj: &[u16], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

fn degrees(adj: &[u16]) -> impl Iterator<Item = u32> + '_ {
    adj.iter().map(|m| m.count_ones())
}

fn is_connected_masks(adj: &[u16]) -> bool {
    let all = ((1u32 << adj.len()) - 1) as u16;
    let mut comp = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !comp;
        comp |= next;
    }
    comp == all
}

/// Feeds one representative of every isomorphism class on `n` vertices that
/// passes `keep` to `emit`, and returns how many there were. `keep` is
/// applied at every intermediate size; every wanted graph must have a vertex
/// whose deletion leaves a graph that also passes.
fn generate(
    n: usize,
    keep: impl Fn(usize, &[u16]) -> bool,
    mut emit: impl FnMut(&[u16]),
) -> Result<usize> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "graph enumeration", n, cap: ENUMERATION_CAP });
    }
    if n == 1 {
        if keep(1, &[0]) {
            emit(&[0]);
            return Ok(1);
        }
        return Ok(0);
    }
    let mut level: Vec<Masks> = vec![vec![0]];
    for k in 2..=n {
        let last = k == n;
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        let new = k - 1;
        for base in &level {
            for subset in 0u16..(1 << new) {
                let mut adj = base.clone();
                for (v, m) in adj.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *m |= 1 << new;
                    }
                }
                adj.push(subset);
                if keep(k, &adj) && seen.insert(canonical_code(&adj)) {
                    if last {
                        emit(&adj);
                    } else {
                        next.push(adj);
                    }
                }
            }
        }
        if last {
            return Ok(seen.len());
        }
        level = next;
    }
    unreachable!("loop returns at k = n")
}

fn to_graph(adj: &[u16]) -> Graph {
    let wide: Vec<u64> = adj.iter().map(|&m| m as u64).collect();
    Graph::from_masks(&wide).expect("enumerated masks are symmetric and loop-free")
}

fn collect(n: usize, keep: impl Fn(usize, &[u16]) -> bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(n, keep, |a| out.push(to_graph(a)))?;
    Ok(out)
}

/// One graph per isomorphism class on `n` vertices.
pub fn graphs(n: usize) -> Result<Vec<Graph>> {
    collect(n, |_, _| true)
}

/// One connected graph per isomorphism class on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    // A connected graph always has a vertex whose removal keeps it connected.
    collect(n, |_, a| is_connected_masks(a))
}

/// Streams the connected classes on `n` vertices without storing the last
/// level; returns the class count.
pub fn for_each_connected_graph(n: usize, mut f: impl FnMut(&Graph)) -> Result<usize> {
    generate(n, |_, a| is_connected_masks(a), |a| f(&to_graph(a)))
}

/// Connected graphs on `1..=max_n` vertices, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

/// One connected regular graph per isomorphism class on `n` vertices.
pub fn connected_regular_graphs(n: usize) -> Result<Vec<Graph>> {
    // Deleting vertices from a regular graph on n vertices leaves degrees
    // spread over at most n − k values.
    let keep = |k: usize, adj: &[u16]| {
        let max = degrees(adj).max().unwrap_or(0);
        let min = degrees(adj).min().unwrap_or(0);
        (max - min) as usize <= n - k
    };
    Ok(collect(n, keep)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn masks(g: &Graph) -> Vec<u16> {
        g.adjacency_masks().unwrap().iter().map(|&m| m as u16).collect()
    }

    #[test]
    fn class_counts_match_known_tables() {
        let all: Vec<usize> = (1..=7).map(|n| graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn regular_counts_match_known_tables() {
        let counts: Vec<usize> = (1..=8).map(|n| connected_regular_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 5, 4, 17]);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let p = petersen();
        let code = canonical_code(&masks(&p));
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let edges: Vec<_> = p.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let q = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(canonical_code(&masks(&q)), code);
        assert_ne!(canonical_code(&masks(&cycle(10).unwrap())), code);
        let k = complete(10).unwrap();
        assert_eq!(canonical_code(&masks(&k)), (1u128 << 45) - 1);
    }

    #[test]
    fn streaming_matches_collected() {
        let mut edges = 0;
        let count = for_each_connected_graph(6, |g| edges += g.edge_count()).unwrap();
        assert_eq!(count, 112);
        let listed = connected_graphs(6).unwrap();
        assert_eq!(edges, listed.iter().map(Graph::edge_count).sum::<usize>());
        assert!(listed.iter().all(Graph::is_connected));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(graphs(11).is_err());
        assert!(graphs(0).is_err());
    }
}
