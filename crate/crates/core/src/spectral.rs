//! Adjacency and Laplacian spectra and the spectral quantities built from
//! them: extreme values, spectral gap, mean-zero Laplacian extremes, block
//! decompositions, and the Wilf/Hoffman/independence bounds.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};

/// Default comparison tolerance for spectral values (relative, floored at 1).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest vertex count handled by the dense eigensolver.
pub const DENSE_CAP: usize = 4096;

/// `|a − b| ≤ tol · max(1, |a|, |b|)`.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

/// ⌊x⌋ with values within `tol` below an integer snapped up to it.
pub fn snapped_floor(x: f64, tol: f64) -> i64 {
    (x + tol).floor() as i64
}

/// ⌈x⌉ with values within `tol` above an integer snapped down to it.
pub fn snapped_ceil(x: f64, tol: f64) -> i64 {
    (x - tol).ceil() as i64
}

/// Eigenvalues with multiplicity, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values, tol: DEFAULT_TOL }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// (m, M): smallest and largest eigenvalue.
    pub fn extremes(&self) -> Option<(f64, f64)> {
        Some((*self.values.first()?, *self.values.last()?))
    }

    /// Nearest eigenvalue to `x`.
    pub fn nearest(&self, x: f64) -> Option<f64> {
        let i = self.values.partition_point(|&v| v < x);
        [i.checked_sub(1), Some(i)]
            .into_iter()
            .flatten()
            .filter_map(|j| self.values.get(j).copied())
            .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
    }

    pub fn contains(&self, x: f64) -> bool {
        self.nearest(x).is_some_and(|v| approx_eq(v, x, self.tol))
    }

    /// Number of eigenvalues within tolerance of `x`.
    pub fn multiplicity(&self, x: f64) -> usize {
        self.values.iter().filter(|&&v| approx_eq(v, x, self.tol)).count()
    }

    /// {−λ : λ ∈ σ}.
    pub fn negated(&self) -> Spectrum {
        Spectrum { values: self.values.iter().rev().map(|v| -v).collect(), tol: self.tol }
    }

    /// {c − λ : λ ∈ σ}.
    pub fn reflected(&self, c: f64) -> Spectrum {
        Spectrum { values: self.values.iter().rev().map(|v| c - v).collect(), tol: self.tol }
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Spectrum::new(values).with_tol(self.tol)
    }

    /// Multiset equality within tolerance: pair the sorted lists in order.
    pub fn approx_eq(&self, other: &Spectrum) -> bool {
        self.len() == other.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| approx_eq(a, b, self.tol))
    }

    /// Largest elementwise difference of the sorted lists, if lengths agree.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.approx_eq(&self.negated())
    }
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for u in 0..n {
        for &v in g.neighbors(u) {
            a[(u, v)] = 1.0;
        }
    }
    a
}

pub fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let mut l = -adjacency_matrix(g);
    for v in 0..g.n() {
        l[(v, v)] = g.degree(v) as f64;
    }
    l
}

fn check_cap(n: usize) -> Result<()> {
    if n > DENSE_CAP {
        return Err(Error::CapExceeded { what: "dense eigensolver", n, cap: DENSE_CAP });
    }
    Ok(())
}

fn eigenvalues(m: DMatrix<f64>) -> Result<Spectrum> {
    check_cap(m.nrows())?;
    Ok(Spectrum::new(m.symmetric_eigenvalues().iter().copied().collect()))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues(adjacency_matrix(g))
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues(laplacian_matrix(g))
}

/// An eigenpair of the adjacency matrix.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: DVector<f64>,
}

/// Full eigendecomposition of the adjacency matrix, eigenvalues ascending.
pub fn adjacency_eigenpairs(g: &Graph) -> Result<Vec<EigenPair>> {
    check_cap(g.n())?;
    let eig = SymmetricEigen::new(adjacency_matrix(g));
    let mut pairs: Vec<_> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.column_iter())
        .map(|(&value, col)| EigenPair { value, vector: col.into_owned() })
        .collect();
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(pairs)
}

/// (m, M) of a spectrum.
pub fn extremes(s: &Spectrum) -> Result<(f64, f64)> {
    s.extremes()
        .ok_or_else(|| Error::InvalidParameter("empty spectrum".into()))
}

/// d minus the largest adjacency eigenvalue strictly below d.
pub fn spectral_gap(g: &Graph) -> Result<f64> {
    spectral_gap_with_tol(g, DEFAULT_TOL)
}

pub fn spectral_gap_with_tol(g: &Graph, tol: f64) -> Result<f64> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::InvalidParameter("spectral gap needs at least two vertices".into()));
    }
    let s = adjacency_spectrum(g)?.with_tol(tol);
    let d = d as f64;
    let below = s
        .values()
        .iter()
        .rev()
        .find(|&&v| !approx_eq(v, d, tol))
        .copied()
        .expect("a connected graph on >= 2 vertices has a simple top eigenvalue");
    Ok(d - below)
}

/// (m_L, M_L): extremes of the Laplacian on mean-zero vectors, i.e. the
/// second-smallest and largest Laplacian eigenvalue of a connected graph.
pub fn mean_zero_extremes(g: &Graph) -> Result<(f64, f64)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::InvalidParameter("no mean-zero vectors on one vertex".into()));
    }
    let s = laplacian_spectrum(g)?;
    let v = s.values();
    Ok((v[1], v[v.len() - 1]))
}

/// Per-part extremes of the diagonal blocks of the adjacency operator.
#[derive(Debug, Clone)]
pub struct BlockExtremes {
    /// (m_i, M_i) for each part; empty parts report (0, 0).
    pub parts: Vec<(f64, f64)>,
    pub empty_parts: Vec<bool>,
    pub m: f64,
    pub big_m: f64,
    /// (k − 1)·m + M
    pub lhs: f64,
    /// Σ M_i
    pub rhs: f64,
    pub holds: bool,
}

pub fn block_extremes(g: &Graph, partition: &[VertexSubset]) -> Result<BlockExtremes> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in partition.iter().enumerate() {
        if part.universe() != n {
            return Err(Error::InvalidParameter("part has the wrong universe size".into()));
        }
        for v in part.iter() {
            if owner[v] != usize::MAX {
                return Err(Error::Overlap(v));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::Uncovered(v));
    }
    let (m, big_m) = extremes(&adjacency_spectrum(g)?)?;
    let mut parts = Vec::with_capacity(partition.len());
    let mut empty_parts = Vec::with_capacity(partition.len());
    for part in partition {
        if part.is_empty() {
            parts.push((0.0, 0.0));
            empty_parts.push(true);
        } else {
            let sub = g.induced_subgraph(part)?;
            parts.push(extremes(&adjacency_spectrum(&sub.graph)?)?);
            empty_parts.push(false);
        }
    }
    let k = partition.len() as f64;
    let lhs = (k - 1.0) * m + big_m;
    let rhs: f64 = parts.iter().map(|p| p.1).sum();
    let holds = lhs <= rhs + DEFAULT_TOL * 1f64.max(lhs.abs());
    Ok(BlockExtremes { parts, empty_parts, m, big_m, lhs, rhs, holds })
}

/// Spectrum of the 2n × 2n operator [[0, T], [T, 0]].
pub fn antidiagonal_spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    check_cap(2 * n)?;
    let a = adjacency_matrix(g);
    let mut big = DMatrix::zeros(2 * n, 2 * n);
    big.view_mut((0, n), (n, n)).copy_from(&a);
    big.view_mut((n, 0), (n, n)).copy_from(&a);
    eigenvalues(big)
}

/// Spectral quantities and the coloring/independence bounds derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBounds {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub avg_degree: f64,
    /// M(T)
    pub big_m: f64,
    /// m(T)
    pub m: f64,
    /// ⌊M⌋ + 1
    pub wilf: usize,
    /// ⌈1 − M/m⌉; `None` for edgeless graphs, where m = 0.
    pub hoffman: Option<usize>,
    /// Spectral gap, for connected regular graphs on ≥ 2 vertices.
    pub gap: Option<f64>,
    /// Mean-zero Laplacian extremes, for connected graphs on ≥ 2 vertices.
    pub mean_zero: Option<(f64, f64)>,
    /// Largest Laplacian eigenvalue M(L).
    pub laplacian_max: f64,
    /// −m/(d − m), for regular graphs with an edge.
    pub independence_bound: Option<f64>,
    /// 1 − δ/M(L); 1 when M(L) = 0.
    pub mindeg_independence_bound: f64,
}

pub fn bounds(g: &Graph) -> Result<SpectralBounds> {
    bounds_with_tol(g, DEFAULT_TOL)
}

pub fn bounds_with_tol(g: &Graph, tol: f64) -> Result<SpectralBounds> {
    let adj = adjacency_spectrum(g)?.with_tol(tol);
    let lap = laplacian_spectrum(g)?.with_tol(tol);
    let (m, big_m) = extremes(&adj)?;
    let stats = g.degree_stats();
    let has_edge = g.edge_count() > 0;

    let wilf = (snapped_floor(big_m, tol) + 1) as usize;
    let hoffman = has_edge.then(|| snapped_ceil(1.0 - big_m / m, tol) as usize);

    let connected = g.n() >= 2 && g.is_connected();
    let regular = g.regular_degree();
    let gap = match (regular, connected) {
        (Some(_), true) => Some(spectral_gap_with_tol(g, tol)?),
        _ => None,
    };
    let mean_zero = connected.then(|| {
        let v = lap.values();
        (v[1], v[v.len() - 1])
    });
    let laplacian_max = *lap.values().last().expect("n >= 1");
    let independence_bound = match regular {
        Some(d) if has_edge => Some(-m / (d as f64 - m)),
        _ => None,
    };
    let mindeg_independence_bound = if laplacian_max > tol {
        1.0 - stats.min as f64 / laplacian_max
    } else {
        1.0
    };
    Ok(SpectralBounds {
        n: g.n(),
        max_degree: stats.max,
        min_degree: stats.min,
        avg_degree: stats.avg,
        big_m,
        m,
        wilf,
        hoffman,
        gap,
        mean_zero,
        laplacian_max,
        independence_bound,
        mindeg_independence_bound,
    })
}
