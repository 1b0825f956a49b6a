//! Spectral bipartiteness: symmetry of the adjacency spectrum, membership of
//! −d, and bipartition extraction from the sign pattern of an eigenvector.
//! Also the first-return 2-coloring of an irrational rotation.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::spectral::{self, Spectrum};

/// Eigenvector entries with absolute value below this go to the defect set.
pub const SIGN_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteVerdict {
    pub symmetric_spectrum: bool,
    /// −d ∈ σ(T) for regular graphs; −M(T) ∈ σ(T) otherwise.
    pub minus_d_in_spectrum: bool,
    pub regular: bool,
    pub bipartition: Option<(VertexSubset, VertexSubset)>,
    pub defect: VertexSubset,
    /// Why no bipartition was extracted, if none was.
    pub note: Option<&'static str>,
}

impl BipartiteVerdict {
    /// All indicators agree.
    pub fn consistent(&self) -> bool {
        self.symmetric_spectrum == self.minus_d_in_spectrum
            && (!self.regular || self.minus_d_in_spectrum == self.bipartition.is_some())
    }
}

pub fn is_symmetric_spectrum(s: &Spectrum) -> bool {
    s.is_symmetric()
}

pub fn spectral_bipartite_test(g: &Graph) -> Result<BipartiteVerdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let pairs = spectral::adjacency_eigenpairs(g)?;
    let spectrum = Spectrum::new(pairs.iter().map(|p| p.value).collect());
    let symmetric_spectrum = is_symmetric_spectrum(&spectrum);
    let regular = g.regular_degree();
    let bottom = match regular {
        Some(d) => -(d as f64),
        None => -spectrum.extremes().expect("n >= 1").1,
    };
    let minus_d_in_spectrum = spectrum.contains(bottom);

    let mut verdict = BipartiteVerdict {
        symmetric_spectrum,
        minus_d_in_spectrum,
        regular: regular.is_some(),
        bipartition: None,
        defect: VertexSubset::empty(n),
        note: None,
    };
    if regular.is_none() {
        verdict.note = Some("graph is not regular; extraction skipped and -M tested in place of -d");
        return Ok(verdict);
    }
    if !minus_d_in_spectrum {
        verdict.note = Some("-d is not an eigenvalue");
        return Ok(verdict);
    }
    // Smallest eigenvalue is −d; its eigenvector is ±const on the two sides.
    let f = &pairs[0].vector;
    let mut a = VertexSubset::empty(n);
    let mut b = VertexSubset::empty(n);
    for (v, &x) in f.iter().enumerate() {
        if x > SIGN_THRESHOLD {
            a.insert(v);
        } else if x < -SIGN_THRESHOLD {
            b.insert(v);
        } else {
            verdict.defect.insert(v);
        }
    }
    verdict.bipartition = Some((a, b));
    Ok(verdict)
}

/// Two-coloring by BFS parity; `None` when an odd cycle exists.
pub fn bfs_bipartition_oracle(g: &Graph) -> Option<(VertexSubset, VertexSubset)> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are labeled");
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut a = VertexSubset::empty(n);
    let mut b = VertexSubset::empty(n);
    for (v, s) in side.iter().enumerate() {
        if *s == Some(false) {
            a.insert(v);
        } else {
            b.insert(v);
        }
    }
    Some((a, b))
}

/// Both sets independent and together covering every vertex exactly once.
pub fn is_bipartition(g: &Graph, a: &VertexSubset, b: &VertexSubset) -> bool {
    a.is_disjoint(b)
        && a.union(b).len() == g.n()
        && g.edges().iter().all(|&(u, v)| a.contains(u) != a.contains(v))
}

/// Orbit samples of x ↦ x + α (mod 1), labeled by the parity of the first
/// time they enter C = [0, γ).
#[derive(Debug, Clone, PartialEq)]
pub struct RotationColoring {
    pub samples: Vec<f64>,
    pub hit_times: Vec<usize>,
    pub labels: Vec<u8>,
    /// Samples lying in C.
    pub defect_count: usize,
    /// Indices `k` with `x_k ∉ C` whose label equals that of `x_{k+1}`.
    pub violations: Vec<usize>,
}

const RATIONAL_DENOMINATOR_CAP: u64 = 10_000;
const RATIONAL_RESIDUE: f64 = 1e-9;

pub fn rotation_two_coloring(alpha: f64, gamma: f64, samples: usize) -> Result<RotationColoring> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} must lie in (0, 1)")));
    }
    if !(gamma > 0.0 && gamma < alpha.min(1.0 - alpha)) {
        return Err(Error::InvalidParameter(format!(
            "gamma = {gamma} must lie in (0, min(alpha, 1 - alpha))"
        )));
    }
    for q in 1..=RATIONAL_DENOMINATOR_CAP {
        let qa = q as f64 * alpha;
        if (qa - qa.round()).abs() < RATIONAL_RESIDUE {
            return Err(Error::NearRational(alpha));
        }
    }
    let point = |k: usize| (k as f64 * alpha).fract();
    let budget = (10.0 / gamma).ceil() as usize;

    let xs: Vec<f64> = (0..samples).map(point).collect();
    let mut hit_times = Vec::with_capacity(samples);
    for k in 0..samples {
        let j = (0..=budget)
            .find(|&j| point(k + j) < gamma)
            .ok_or(Error::HitBudget(budget))?;
        hit_times.push(j);
    }
    let labels: Vec<u8> = hit_times.iter().map(|&j| (j % 2) as u8).collect();
    let defect_count = xs.iter().filter(|&&x| x < gamma).count();
    let violations = (0..samples.saturating_sub(1))
        .filter(|&k| xs[k] >= gamma && labels[k] == labels[k + 1])
        .collect();
    Ok(RotationColoring { samples: xs, hit_times, labels, defect_count, violations })
}

/// First-hit time of an arbitrary point `x ∈ [0, 1)` into `[0, γ)` and its
/// parity label.
pub fn rotation_label(alpha: f64, gamma: f64, x: f64) -> Result<(usize, u8)> {
    let budget = (10.0 / gamma).ceil() as usize;
    let j = (0..=budget)
        .find(|&j| (x + j as f64 * alpha).fract() < gamma)
        .ok_or(Error::HitBudget(budget))?;
    Ok((j, (j % 2) as u8))
}
