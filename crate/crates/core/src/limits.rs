//! Spectra along graph families: eigenvalue unions as a finite stand-in for
//! the spectrum of a limit object, the distance functional δ, and spectral
//! gaps along a sequence.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::generators::GraphFamily;
use crate::spectral::{self, Spectrum, DEFAULT_TOL};

/// Union of the adjacency spectra of a family up to some index.
#[derive(Debug, Clone)]
pub struct SpectrumAccumulation {
    /// Sorted, with values closer than the tolerance collapsed to the smaller one.
    pub points: Vec<f64>,
    pub per_index: BTreeMap<usize, Spectrum>,
    pub degree_bound: usize,
}

impl SpectrumAccumulation {
    /// Whether `x` lies within tolerance of an accumulated point.
    pub fn contains(&self, x: f64) -> bool {
        let i = self.points.partition_point(|&p| p < x);
        [i.checked_sub(1), Some(i)]
            .into_iter()
            .flatten()
            .filter_map(|j| self.points.get(j))
            .any(|&p| spectral::approx_eq(p, x, DEFAULT_TOL))
    }
}

pub fn accumulate_spectra(f: &GraphFamily, max_index: usize) -> Result<SpectrumAccumulation> {
    let mut per_index = BTreeMap::new();
    for k in f.indices_up_to(max_index) {
        per_index.insert(k, spectral::adjacency_spectrum(&f.get(k)?)?);
    }
    if per_index.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "family {} has no index <= {max_index}",
            f.name
        )));
    }
    let mut all: Vec<f64> = per_index.values().flat_map(|s| s.values().iter().copied()).collect();
    all.sort_by(f64::total_cmp);
    let mut points: Vec<f64> = Vec::with_capacity(all.len());
    for x in all {
        match points.last() {
            Some(&last) if spectral::approx_eq(last, x, DEFAULT_TOL) => {}
            _ => points.push(x),
        }
    }
    Ok(SpectrumAccumulation { points, per_index, degree_bound: f.degree_bound })
}

/// Largest distance between consecutive accumulated points inside
/// `[lo, hi]`, counting `lo` and `hi` themselves as points.
pub fn max_gap(acc: &SpectrumAccumulation, interval: (f64, f64)) -> Result<f64> {
    let (lo, hi) = interval;
    if lo.partial_cmp(&hi).is_none_or(|o| o.is_gt()) {
        return Err(Error::InvalidParameter(format!("empty interval [{lo}, {hi}]")));
    }
    let slack = DEFAULT_TOL * 1f64.max(lo.abs()).max(hi.abs());
    let inside: Vec<f64> = acc
        .points
        .iter()
        .copied()
        .filter(|&p| p >= lo - slack && p <= hi + slack)
        .map(|p| p.clamp(lo, hi))
        .collect();
    if inside.is_empty() {
        return Err(Error::InvalidParameter(format!("no accumulated points in [{lo}, {hi}]")));
    }
    let chain = std::iter::once(lo).chain(inside).chain(std::iter::once(hi));
    let mut prev = lo;
    let mut gap: f64 = 0.0;
    for p in chain {
        gap = gap.max(p - prev);
        prev = p;
    }
    Ok(gap)
}

/// δ(x) = min over eigenvalues λ of (x − λ)².
pub fn delta(s: &Spectrum, x: f64) -> Result<f64> {
    s.values()
        .iter()
        .map(|&l| (x - l).powi(2))
        .min_by(f64::total_cmp)
        .ok_or_else(|| Error::InvalidParameter("empty spectrum".into()))
}

/// δ(x) through ‖S‖ − ‖S − ‖S‖·I‖ with S = (T − x)(T − x)*, evaluated on
/// the spectrum of S, which is {(λ − x)²}.
pub fn delta_via_norms(s: &Spectrum, x: f64) -> Result<f64> {
    let sq: Vec<f64> = s.values().iter().map(|&l| (l - x).powi(2)).collect();
    let norm_s = sq
        .iter()
        .copied()
        .max_by(f64::total_cmp)
        .ok_or_else(|| Error::InvalidParameter("empty spectrum".into()))?;
    let shifted = sq.iter().map(|&v| (v - norm_s).abs()).fold(0.0, f64::max);
    Ok(norm_s - shifted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Constant,
    Increasing,
    Decreasing,
    Mixed,
}

#[derive(Debug, Clone)]
pub struct GapPersistence {
    pub per_index: Vec<(usize, Result<f64>)>,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub trend: Trend,
}

pub fn gap_persistence(f: &GraphFamily, max_index: usize) -> GapPersistence {
    let per_index: Vec<(usize, Result<f64>)> = f
        .indices_up_to(max_index)
        .map(|k| (k, f.get(k).and_then(|g| spectral::spectral_gap(&g))))
        .collect();
    let gaps: Vec<f64> = per_index.iter().filter_map(|(_, r)| r.as_ref().ok().copied()).collect();
    let min = gaps.iter().copied().min_by(f64::total_cmp);
    let max = gaps.iter().copied().max_by(f64::total_cmp);
    let (mut up, mut down) = (false, false);
    for w in gaps.windows(2) {
        if spectral::approx_eq(w[0], w[1], DEFAULT_TOL) {
            continue;
        }
        if w[1] > w[0] {
            up = true;
        } else {
            down = true;
        }
    }
    let trend = match (up, down) {
        (false, false) => Trend::Constant,
        (true, false) => Trend::Increasing,
        (false, true) => Trend::Decreasing,
        (true, true) => Trend::Mixed,
    };
    GapPersistence { per_index, min, max, trend }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use std::f64::consts::PI;

    #[test]
    fn cycle_accumulation_contains_cosines() {
        let acc = accumulate_spectra(&GraphFamily::cycles(12), 12).unwrap();
        for x in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            assert!(acc.contains(x), "missing {x}");
        }
        for n in 3..=12 {
            for i in 0..n {
                assert!(acc.contains(2.0 * (2.0 * PI * i as f64 / n as f64).cos()));
            }
        }
        assert!(acc.points.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn constant_families() {
        let p = petersen();
        let acc = accumulate_spectra(&GraphFamily::constant("petersen", p, 4), 4).unwrap();
        assert_eq!(acc.points.len(), 3);
        let acc = accumulate_spectra(&GraphFamily::constant("k2", path(2).unwrap(), 3), 3).unwrap();
        assert_eq!(acc.points.len(), 2);
        assert_eq!(max_gap(&acc, (-1.0, 1.0)).unwrap(), 2.0);
        assert!(accumulate_spectra(&GraphFamily::cycles(10), 2).is_err());
    }

    #[test]
    fn max_gap_needs_points() {
        let acc = accumulate_spectra(&GraphFamily::constant("k2", path(2).unwrap(), 1), 1).unwrap();
        assert!(max_gap(&acc, (-0.5, 0.5)).is_err());
        assert_eq!(max_gap(&acc, (0.0, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn delta_examples() {
        let s = Spectrum::new(vec![-2.0, 2.0]);
        assert_eq!(delta(&s, 0.0).unwrap(), 4.0);
        let c4 = spectral::adjacency_spectrum(&cycle(4).unwrap()).unwrap();
        assert!(delta(&c4, 2.0).unwrap() < 1e-18);
        let pet = spectral::adjacency_spectrum(&petersen()).unwrap();
        assert!((delta(&pet, 0.0).unwrap() - 1.0).abs() < 1e-9);
        for x in [-3.0, -0.3, 0.0, 1.7, 2.5] {
            assert!((delta(&pet, x).unwrap() - delta_via_norms(&pet, x).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn gap_trends() {
        let g = gap_persistence(&GraphFamily::cycles(30), 30);
        assert_eq!(g.trend, Trend::Decreasing);
        let k4 = gap_persistence(&GraphFamily::constant("k4", complete(4).unwrap(), 5), 5);
        assert_eq!(k4.trend, Trend::Constant);
        assert!((k4.min.unwrap() - 4.0).abs() < 1e-9);
        let bad = gap_persistence(&GraphFamily::constant("p3", path(3).unwrap(), 2), 2);
        assert!(bad.per_index.iter().all(|(_, r)| r.is_err()));
        assert_eq!(bad.min, None);
    }
}
