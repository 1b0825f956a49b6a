//! Invariant checks over built-in fixtures.

use std::f64::consts::PI;

use serde_json::{json, Value};

use pmpgraph::bipartite::{bfs_bipartition_oracle, rotation_two_coloring, spectral_bipartite_test};
use pmpgraph::coloring::{brute_force_chromatic, brute_force_independence, function_graph_color, wilf_color};
use pmpgraph::generators::*;
use pmpgraph::io;
use pmpgraph::limits::{accumulate_spectra, delta, delta_via_norms, max_gap};
use pmpgraph::matching::{brouwer_haemers_test, perfect_matching_oracle, tutte_scan, two_set_inequality, ScanMode};
use pmpgraph::spectral::{self, adjacency_spectrum, Spectrum};
use pmpgraph::{Graph, Result, Transport, VertexSubset};

use crate::report::report;
use crate::Failure;

type Check = fn() -> Result<bool>;

fn top(g: &Graph) -> Result<f64> {
    Ok(spectral::extremes(&adjacency_spectrum(g)?)?.1)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

fn fixtures() -> Vec<Graph> {
    vec![
        cycle(5).unwrap(),
        cycle(6).unwrap(),
        path(4).unwrap(),
        complete(5).unwrap(),
        complete_bipartite(2, 3).unwrap(),
        star(4).unwrap(),
        petersen(),
        random_regular(12, 3, 7).unwrap(),
        gnp(9, 0.4, 1).unwrap(),
    ]
}

fn cycle_spectra() -> Result<bool> {
    for n in 3..=16 {
        let got = adjacency_spectrum(&cycle(n)?)?;
        let want = Spectrum::new((0..n).map(|i| 2.0 * (2.0 * PI * i as f64 / n as f64).cos()).collect());
        if got.max_deviation(&want).is_none_or(|d| d > 1e-9) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn petersen_spectrum() -> Result<bool> {
    let s = adjacency_spectrum(&petersen())?;
    Ok(s.multiplicity(3.0) == 1 && s.multiplicity(1.0) == 5 && s.multiplicity(-2.0) == 4)
}

fn paley_palette() -> Result<bool> {
    let d = paley_tournament();
    let c = function_graph_color(&d)?;
    Ok(c.is_proper(&d.underlying()) && c.palette_size() <= 7 && brute_force_chromatic(&d.underlying())? == 7)
}

fn wilf_hoffman_sandwich() -> Result<bool> {
    for g in fixtures() {
        let b = spectral::bounds(&g)?;
        let chi = brute_force_chromatic(&g)?;
        let c = wilf_color(&g)?;
        let ok = b.hoffman.is_none_or(|h| h <= chi)
            && chi <= b.wilf
            && c.is_proper(&g)
            && c.palette_size() <= b.wilf;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn degree_sandwich() -> Result<bool> {
    for g in fixtures() {
        let b = spectral::bounds(&g)?;
        let ok = b.m <= b.avg_degree + 1e-9
            && b.avg_degree <= b.big_m + 1e-9
            && b.big_m <= g.max_degree() as f64 + 1e-9
            && (g.edge_count() == 0 || b.m < 0.0);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn biregular_spectra() -> Result<bool> {
    for a in 1..=4 {
        for b in a..=4 {
            if !close(top(&complete_bipartite(a, b)?)?, ((a * b) as f64).sqrt()) {
                return Ok(false);
            }
        }
    }
    for g in [cycle(4)?, complete(4)?, petersen()] {
        let d = g.max_degree() as f64;
        if !close(top(&subdivide(&g)?)?, (2.0 * d).sqrt()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn antidiagonal() -> Result<bool> {
    for g in fixtures() {
        let s = adjacency_spectrum(&g)?;
        if !spectral::antidiagonal_spectrum(&g)?.approx_eq(&s.union(&s.negated())) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bipartite_agreement() -> Result<bool> {
    for g in fixtures().into_iter().filter(Graph::is_connected) {
        let v = spectral_bipartite_test(&g)?;
        if v.symmetric_spectrum != bfs_bipartition_oracle(&g).is_some() || !v.consistent() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rotation_demo() -> Result<bool> {
    let r = rotation_two_coloring((5f64.sqrt() - 1.0) / 2.0, 0.05, 1000)?;
    Ok(r.defect_count <= 51 && r.violations.is_empty())
}

fn independence_bounds() -> Result<bool> {
    for g in fixtures().into_iter().filter(Graph::is_connected) {
        let b = spectral::bounds(&g)?;
        let alpha = brute_force_independence(&g)? as f64 / g.n() as f64;
        if b.independence_bound.is_some_and(|x| alpha > x + 1e-9) || alpha > b.mindeg_independence_bound + 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn block_inequality() -> Result<bool> {
    let g = petersen();
    let halves = [
        VertexSubset::from_indices(10, 0..5)?,
        VertexSubset::from_indices(10, 5..10)?,
    ];
    Ok(spectral::block_extremes(&g, &halves)?.holds)
}

fn matching_fixtures() -> Result<bool> {
    let k4 = complete(4)?;
    let c4 = cycle(4)?;
    let pet = petersen();
    Ok(brouwer_haemers_test(&k4)?
        && brouwer_haemers_test(&c4)?
        && !brouwer_haemers_test(&pet)?
        && perfect_matching_oracle(&pet)?.is_some()
        && tutte_scan(&star(3)?, ScanMode::Exhaustive)?.c_star == 3.0)
}

fn tutte_equivalence() -> Result<bool> {
    for g in fixtures().into_iter().filter(|g| g.n() % 2 == 0) {
        let r = tutte_scan(&g, ScanMode::Exhaustive)?;
        if r.classical_holds != r.matching.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn two_set_petersen() -> Result<bool> {
    let y = VertexSubset::from_indices(10, [0])?;
    let z = VertexSubset::from_indices(10, [2])?;
    let r = two_set_inequality(&petersen(), &y, &z)?;
    Ok(close(r.lhs, 1.0 / 81.0) && close(r.rhs, 9.0 / 49.0) && r.holds)
}

fn mass_transport() -> Result<bool> {
    for g in fixtures() {
        let phi = Transport::from_fn(&g, |x, y| (3 * x + y) as f64)?;
        if g.verify_mass_transport(&phi)? > 1e-12 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn limit_spectrum() -> Result<bool> {
    let fam = GraphFamily::cycles(64);
    let g64 = max_gap(&accumulate_spectra(&fam, 64)?, (-2.0, 2.0))?;
    let g16 = max_gap(&accumulate_spectra(&fam, 16)?, (-2.0, 2.0))?;
    let s = adjacency_spectrum(&petersen())?;
    let norms_agree = [-3.0, -0.5, 0.0, 2.2].iter().all(|&x| {
        close(delta(&s, x).unwrap_or(f64::NAN), delta_via_norms(&s, x).unwrap_or(f64::NAN))
    });
    Ok(g64 < 0.06 && g64 < g16 && norms_agree)
}

fn edge_list_round_trip() -> Result<bool> {
    for g in fixtures() {
        if io::read_graph(&io::write_graph(&g))? != g {
            return Ok(false);
        }
    }
    let d = paley_tournament();
    Ok(io::parse(&io::write_directed(&d))?.to_text() == io::write_directed(&d))
}

pub fn run() -> std::result::Result<String, Failure> {
    let checks: [(&str, Check); 17] = [
        ("cycle_spectra", cycle_spectra),
        ("petersen_spectrum", petersen_spectrum),
        ("paley_palette", paley_palette),
        ("wilf_hoffman_sandwich", wilf_hoffman_sandwich),
        ("degree_sandwich", degree_sandwich),
        ("biregular_spectra", biregular_spectra),
        ("antidiagonal_spectrum", antidiagonal),
        ("bipartite_agreement", bipartite_agreement),
        ("rotation_demo", rotation_demo),
        ("independence_bounds", independence_bounds),
        ("block_inequality", block_inequality),
        ("matching_fixtures", matching_fixtures),
        ("tutte_equivalence", tutte_equivalence),
        ("two_set_petersen", two_set_petersen),
        ("mass_transport", mass_transport),
        ("limit_spectrum", limit_spectrum),
        ("edge_list_round_trip", edge_list_round_trip),
    ];
    let mut results = Vec::new();
    let mut passed = 0;
    for (name, check) in checks.iter() {
        let entry = match check() {
            Ok(ok) => {
                passed += usize::from(ok);
                json!({"name": name, "pass": ok})
            }
            Err(e) => json!({"name": name, "pass": false, "error": e.code()}),
        };
        results.push(entry);
    }
    let total = checks.len();
    let payload: Value = json!({"checks": results, "passed": passed, "total": total});
    let text = report("verify", None, payload);
    if passed == total {
        Ok(text)
    } else {
        Err(Failure::Checks(text))
    }
}
