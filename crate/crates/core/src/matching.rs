//! Odd components, Tutte ratios and spectral matching conditions.
//!
//! For a vertex set A, O_A counts the odd components of G − A. Under the
//! uniform measure each of them has ν-mass 1/n regardless of its size, so
//! ν_A(O_A)/µ(A) is just (#odd components of G − A)/|A|.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::spectral::{self, DEFAULT_TOL};

pub const EXHAUSTIVE_SCAN_CAP: usize = 22;
pub const SEARCH_CAP: usize = 24;

/// Number of odd-cardinality components of G − A.
pub fn odd_component_count(g: &Graph, a: &VertexSubset) -> usize {
    let rest = a.complement();
    if rest.is_empty() {
        return 0;
    }
    let sub = g.induced_subgraph(&rest).expect("nonempty complement");
    sub.graph.components().iter().filter(|c| c.len() % 2 == 1).count()
}

/// ν_A(O_A) = (#odd components of G − A)/n.
pub fn odd_component_measure(g: &Graph, a: &VertexSubset) -> f64 {
    odd_component_count(g, a) as f64 / g.n() as f64
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn neighbors_of(adj: &[u64], mut set: u64) -> u64 {
    let mut out = 0;
    while set != 0 {
        let v = set.trailing_zeros() as usize;
        out |= adj[v];
        set &= set - 1;
    }
    out
}

/// Odd components of the graph induced on `alive`, by flood fill on masks.
fn odd_components_masked(adj: &[u64], mut alive: u64) -> usize {
    let mut odd = 0;
    while alive != 0 {
        let mut comp = alive & alive.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let next = neighbors_of(adj, frontier) & alive & !comp;
            comp |= next;
            frontier = next;
        }
        odd += comp.count_ones() as usize % 2;
        alive &= !comp;
    }
    odd
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Randomized { seed: u64, samples: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TutteReport {
    /// max over scanned nonempty A of (#odd components of G − A)/|A|.
    pub c_star: f64,
    pub witness: VertexSubset,
    pub witness_odd_components: usize,
    /// c* ≤ 1
    pub classical_holds: bool,
    /// c* < 1
    pub strict_holds: bool,
    pub mode: ScanMode,
    pub subsets_scanned: usize,
    /// 2·m_L ≥ M_L
    pub bh_condition: bool,
    pub matching: Option<Vec<(usize, usize)>>,
}

struct Best {
    odd: usize,
    size: usize,
    mask: u64,
}

impl Best {
    /// Strictly larger ratio, or equal ratio with a smaller mask.
    fn offer(&mut self, odd: usize, size: usize, mask: u64) {
        let lhs = odd * self.size;
        let rhs = self.odd * size;
        if lhs > rhs || (lhs == rhs && mask < self.mask) {
            *self = Best { odd, size, mask };
        }
    }
}

pub fn tutte_scan(g: &Graph, mode: ScanMode) -> Result<TutteReport> {
    let n = g.n();
    if n > 64 {
        return Err(Error::CapExceeded { what: "tutte scan", n, cap: 64 });
    }
    let adj = g.adjacency_masks()?;
    let all = full_mask(n);
    let ratio_of = |mask: u64| odd_components_masked(&adj, all & !mask);
    let mut best = Best { odd: 0, size: 1, mask: u64::MAX };
    let mut scanned = 0usize;

    match mode {
        ScanMode::Exhaustive => {
            if n > EXHAUSTIVE_SCAN_CAP {
                return Err(Error::CapExceeded { what: "exhaustive tutte scan", n, cap: EXHAUSTIVE_SCAN_CAP });
            }
            for mask in 1..=all {
                best.offer(ratio_of(mask), mask.count_ones() as usize, mask);
            }
            scanned = all as usize;
        }
        ScanMode::Randomized { seed, samples } => {
            for v in 0..n {
                best.offer(ratio_of(1 << v), 1, 1 << v);
                scanned += 1;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let min_deg = g.min_degree();
            let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= min_deg + 1).collect();
            let vertices: Vec<usize> = (0..n).collect();
            for _ in 0..samples {
                let mut mask = 0u64;
                if rng.gen_bool(0.5) {
                    // Separate a low-degree vertex from the rest.
                    let v = *low.choose(&mut rng).expect("n >= 1");
                    mask = adj[v];
                }
                let mut extra = 0;
                while extra < n && rng.gen_bool(0.5) {
                    extra += 1;
                }
                if mask == 0 {
                    extra = extra.max(1);
                }
                for &v in vertices.choose_multiple(&mut rng, extra) {
                    mask |= 1 << v;
                }
                if mask != 0 {
                    best.offer(ratio_of(mask), mask.count_ones() as usize, mask);
                    scanned += 1;
                }
            }
        }
    }

    let witness = VertexSubset::from_mask(n, best.mask);
    let c_star = best.odd as f64 / best.size as f64;
    let matching = if n.is_multiple_of(2) && n <= SEARCH_CAP {
        perfect_matching_oracle(g)?
    } else {
        None
    };
    Ok(TutteReport {
        c_star,
        witness,
        witness_odd_components: best.odd,
        classical_holds: best.odd <= best.size,
        strict_holds: best.odd < best.size,
        mode,
        subsets_scanned: scanned,
        bh_condition: bh_condition(g)?,
        matching,
    })
}

/// 2·m_L ≥ M_L from the sorted Laplacian spectrum, without hypotheses.
fn bh_condition(g: &Graph) -> Result<bool> {
    if g.n() < 2 {
        return Ok(false);
    }
    let lap = spectral::laplacian_spectrum(g)?;
    let v = lap.values();
    let (ml, big_ml) = (v[1], v[v.len() - 1]);
    Ok(2.0 * ml >= big_ml - DEFAULT_TOL * 1f64.max(big_ml))
}

/// 2·m_L ≥ M_L for a connected regular graph.
pub fn brouwer_haemers_test(g: &Graph) -> Result<bool> {
    if g.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    let (ml, big_ml) = spectral::mean_zero_extremes(g)?;
    Ok(2.0 * ml >= big_ml - DEFAULT_TOL * 1f64.max(big_ml))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSetInequality {
    /// µ(Y)µ(Z) / ((1 − µ(Y))(1 − µ(Z)))
    pub lhs: f64,
    /// ((M_L − m_L)/(M_L + m_L))²
    pub rhs: f64,
    pub holds: bool,
}

/// Compares the product of two edge-separated sets against the mean-zero
/// Laplacian extremes.
pub fn two_set_inequality(g: &Graph, y: &VertexSubset, z: &VertexSubset) -> Result<TwoSetInequality> {
    if y.is_empty() || z.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(v) = y.intersection(z).iter().next() {
        return Err(Error::Overlap(v));
    }
    for u in y.iter() {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| z.contains(v)) {
            return Err(Error::EdgeBetween(u, v));
        }
    }
    if g.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    let (ml, big_ml) = spectral::mean_zero_extremes(g)?;
    let (my, mz) = (y.measure(), z.measure());
    let lhs = my * mz / ((1.0 - my) * (1.0 - mz));
    let rhs = ((big_ml - ml) / (big_ml + ml)).powi(2);
    let holds = lhs <= rhs + DEFAULT_TOL;
    Ok(TwoSetInequality { lhs, rhs, holds })
}

/// min over nonempty independent A of |N(A)|/|A|, with the first set (in
/// lexicographic inclusion order) that attains it.
pub fn independent_expansion(g: &Graph) -> Result<(f64, VertexSubset)> {
    let n = g.n();
    if n > SEARCH_CAP {
        return Err(Error::CapExceeded { what: "independent set enumeration", n, cap: SEARCH_CAP });
    }
    let adj = g.adjacency_masks()?;
    let mut best = (usize::MAX, 1usize, 0u64);
    walk_independent(&adj, 0, 0, 0, &mut best);
    let (nb, size, mask) = best;
    Ok((nb as f64 / size as f64, VertexSubset::from_mask(n, mask)))
}

fn walk_independent(adj: &[u64], start: usize, set: u64, nbhd: u64, best: &mut (usize, usize, u64)) {
    for v in start..adj.len() {
        if set >> v & 1 == 1 || nbhd >> v & 1 == 1 {
            continue;
        }
        let set = set | 1 << v;
        let nbhd = nbhd | adj[v];
        let (nb, size) = (nbhd.count_ones() as usize, set.count_ones() as usize);
        if best.0 == usize::MAX || nb * best.1 < best.0 * size {
            *best = (nb, size, set);
        }
        walk_independent(adj, v + 1, set, nbhd, best);
    }
}

/// A perfect matching, if one exists: match the least unmatched vertex to
/// each of its unmatched neighbors in turn, memoizing dead ends.
pub fn perfect_matching_oracle(g: &Graph) -> Result<Option<Vec<(usize, usize)>>> {
    let n = g.n();
    if n > SEARCH_CAP {
        return Err(Error::CapExceeded { what: "perfect matching search", n, cap: SEARCH_CAP });
    }
    if n % 2 == 1 {
        return Ok(None);
    }
    let adj = g.adjacency_masks()?;
    let mut dead = HashSet::new();
    let mut pairs = Vec::with_capacity(n / 2);
    Ok(match_rest(&adj, full_mask(n), &mut dead, &mut pairs).then_some(pairs))
}

fn match_rest(adj: &[u64], free: u64, dead: &mut HashSet<u64>, pairs: &mut Vec<(usize, usize)>) -> bool {
    if free == 0 {
        return true;
    }
    if dead.contains(&free) {
        return false;
    }
    let v = free.trailing_zeros() as usize;
    let mut options = adj[v] & free;
    while options != 0 {
        let w = options.trailing_zeros() as usize;
        options &= options - 1;
        pairs.push((v, w));
        if match_rest(adj, free & !(1 << v) & !(1 << w), dead, pairs) {
            return true;
        }
        pairs.pop();
    }
    dead.insert(free);
    false
}

/// Pairwise disjoint edges of `g` covering every vertex.
pub fn is_perfect_matching(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut covered = vec![false; g.n()];
    for &(u, v) in pairs {
        if !g.has_edge(u, v) || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.iter().all(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set(n: usize, v: &[usize]) -> VertexSubset {
        VertexSubset::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn odd_component_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(odd_component_measure(&k4, &set(4, &[0])), 0.25);
        assert_eq!(odd_component_measure(&petersen(), &VertexSubset::empty(10)), 0.0);
        assert_eq!(odd_component_measure(&cycle(6).unwrap(), &set(6, &[0, 3])), 0.0);
        assert_eq!(odd_component_count(&k4, &VertexSubset::full(4)), 0);
    }

    #[test]
    fn masked_count_agrees_with_components() {
        let g = gnp(12, 0.2, 3).unwrap();
        let adj = g.adjacency_masks().unwrap();
        for mask in (0u64..4096).step_by(37) {
            let a = VertexSubset::from_mask(12, mask);
            assert_eq!(odd_components_masked(&adj, 4095 & !mask), odd_component_count(&g, &a));
        }
    }

    #[test]
    fn tutte_examples() {
        let r = tutte_scan(&complete(4).unwrap(), ScanMode::Exhaustive).unwrap();
        assert_eq!(r.c_star, 1.0);
        assert_eq!(r.witness.to_vec(), vec![0]);
        assert!(r.classical_holds && !r.strict_holds && r.bh_condition);
        assert!(r.matching.is_some());

        let r = tutte_scan(&cycle(6).unwrap(), ScanMode::Exhaustive).unwrap();
        assert_eq!(r.c_star, 1.0);
        assert!(r.classical_holds && !r.bh_condition && r.matching.is_some());

        let r = tutte_scan(&star(3).unwrap(), ScanMode::Exhaustive).unwrap();
        assert_eq!(r.c_star, 3.0);
        assert_eq!(r.witness.to_vec(), vec![0]);
        assert!(!r.classical_holds && r.matching.is_none());
    }

    #[test]
    fn randomized_scan_finds_star_center() {
        let r = tutte_scan(&star(5).unwrap(), ScanMode::Randomized { seed: 1, samples: 50 }).unwrap();
        assert_eq!(r.c_star, 5.0);
        assert!(!r.classical_holds);
    }

    #[test]
    fn exhaustive_cap() {
        assert!(matches!(
            tutte_scan(&cycle(23).unwrap(), ScanMode::Exhaustive),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn brouwer_haemers_examples() {
        assert!(brouwer_haemers_test(&complete(4).unwrap()).unwrap());
        assert!(!brouwer_haemers_test(&petersen()).unwrap());
        assert!(brouwer_haemers_test(&cycle(4).unwrap()).unwrap());
        assert_eq!(brouwer_haemers_test(&path(4).unwrap()).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn two_set_examples() {
        let p = petersen();
        let r = two_set_inequality(&p, &set(10, &[0]), &set(10, &[2])).unwrap();
        assert!((r.lhs - 1.0 / 81.0).abs() < 1e-12);
        assert!((r.rhs - 9.0 / 49.0).abs() < 1e-9);
        assert!(r.holds);

        let c6 = cycle(6).unwrap();
        let r = two_set_inequality(&c6, &set(6, &[0]), &set(6, &[3])).unwrap();
        assert!((r.lhs - 0.04).abs() < 1e-12);
        assert!((r.rhs - 0.36).abs() < 1e-9);

        assert_eq!(
            two_set_inequality(&c6, &set(6, &[0]), &set(6, &[1])).unwrap_err(),
            Error::EdgeBetween(0, 1)
        );
    }

    #[test]
    fn expansion_examples() {
        let (r, _) = independent_expansion(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(r, 1.0);
        let (r, w) = independent_expansion(&star(3).unwrap()).unwrap();
        assert!((r - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(w.to_vec(), vec![1, 2, 3]);
        let (r, _) = independent_expansion(&cycle(6).unwrap()).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn matching_examples() {
        let k2 = path(2).unwrap();
        assert_eq!(perfect_matching_oracle(&k2).unwrap(), Some(vec![(0, 1)]));
        assert_eq!(perfect_matching_oracle(&star(3).unwrap()).unwrap(), None);
        let p = petersen();
        let m = perfect_matching_oracle(&p).unwrap().unwrap();
        assert_eq!(m.len(), 5);
        assert!(is_perfect_matching(&p, &m));
        assert_eq!(perfect_matching_oracle(&cycle(5).unwrap()).unwrap(), None);
    }
}
