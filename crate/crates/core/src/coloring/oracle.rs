//! Exhaustive search for the chromatic and independence numbers.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHROMATIC_CAP: usize = 16;
pub const INDEPENDENCE_CAP: usize = 24;

pub fn brute_force_chromatic(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_CAP {
        return Err(Error::CapExceeded { what: "chromatic number search", n, cap: CHROMATIC_CAP });
    }
    let adj = g.adjacency_masks()?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = if g.edge_count() == 0 { 1 } else { 2 };
    let k = (lower..=n)
        .find(|&k| {
            let mut classes = vec![0u64; k];
            colorable(&adj, &order, 0, &mut classes, 0)
        })
        .unwrap_or(n);
    Ok(k)
}

fn colorable(adj: &[u64], order: &[usize], i: usize, classes: &mut [u64], used: usize) -> bool {
    let Some(&v) = order.get(i) else { return true };
    // New colors are opened in order, which removes palette symmetry.
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            if colorable(adj, order, i + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    false
}

pub fn brute_force_independence(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > INDEPENDENCE_CAP {
        return Err(Error::CapExceeded { what: "independence number search", n, cap: INDEPENDENCE_CAP });
    }
    let adj = g.adjacency_masks()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    max_independent(&adj, all, 0, &mut best);
    Ok(best)
}

fn max_independent(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    max_independent(adj, rest & !adj[v], size + 1, best);
    if adj[v] & rest != 0 {
        max_independent(adj, rest, size, best);
    }
}
