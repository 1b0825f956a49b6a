use pmpgraph::bipartite::*;
use pmpgraph::enumerate::{connected_graphs, graphs};
use pmpgraph::generators::*;
use pmpgraph::spectral::adjacency_spectrum;

#[test]
fn bipartite_graphs_have_symmetric_spectra() {
    let mut bipartite = 0;
    for n in 1..=8 {
        for g in graphs(n).unwrap() {
            if bfs_bipartition_oracle(&g).is_some() {
                assert!(is_symmetric_spectrum(&adjacency_spectrum(&g).unwrap()), "{:?}", g.edges());
                bipartite += 1;
            }
        }
    }
    assert_eq!(bipartite, 1 + 2 + 3 + 7 + 13 + 35 + 88 + 303);
}

#[test]
fn extracted_parts_are_independent() {
    let mut extracted = 0;
    for n in 2..=8 {
        for g in connected_graphs(n).unwrap() {
            let v = spectral_bipartite_test(&g).unwrap();
            if let Some((a, b)) = &v.bipartition {
                assert!(v.defect.is_empty());
                assert!(is_bipartition(&g, a, b), "{:?}", g.edges());
                extracted += 1;
            }
        }
    }
    let big = [cycle(30).unwrap(), complete_bipartite(7, 7).unwrap(), subdivide(&petersen()).unwrap()];
    for g in big.iter().filter(|g| g.regular_degree().is_some()) {
        let (a, b) = spectral_bipartite_test(g).unwrap().bipartition.unwrap();
        assert!(is_bipartition(g, &a, &b));
        extracted += 1;
    }
    assert_eq!(extracted, 7 + 2);
}

#[test]
fn rotation_violations_only_leave_the_defect() {
    let alpha = (5f64.sqrt() - 1.0) / 2.0;
    for (gamma, samples) in [(0.05, 1000), (0.2, 500), (0.01, 3000)] {
        let r = rotation_two_coloring(alpha, gamma, samples).unwrap();
        assert!(r.violations.is_empty());
        let mut same_label_from_defect = 0;
        for k in 0..samples - 1 {
            if r.samples[k] >= gamma {
                assert_eq!(r.hit_times[k], r.hit_times[k + 1] + 1);
            } else if r.labels[k] == r.labels[k + 1] {
                same_label_from_defect += 1;
            }
        }
        // Each defect point has hit time 0; its successor differs in label
        // exactly when that successor's hit time is odd.
        let expected = (0..samples - 1)
            .filter(|&k| r.samples[k] < gamma && r.hit_times[k + 1].is_multiple_of(2))
            .count();
        assert_eq!(same_label_from_defect, expected);
        assert_eq!(r.defect_count, r.samples.iter().filter(|&&x| x < gamma).count());
    }
}
