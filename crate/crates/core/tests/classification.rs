//! Exhaustive search behaviour: determinism, pruning, symmetry reduction.

use conic_kakeya::classify::{self, SearchConfig};
use conic_kakeya::Error;

#[test]
fn worker_count_does_not_change_results() {
    for q in [2u32, 3] {
        let one = classify::enumerate_all(&SearchConfig::new(q)).unwrap();
        let three = classify::enumerate_all(&SearchConfig::new(q).with_workers(3)).unwrap();
        assert_eq!(one.without_timing(), three.without_timing(), "q={q}");
    }
}

#[test]
fn reruns_are_identical() {
    let a = classify::enumerate_all(&SearchConfig::new(3)).unwrap().without_timing();
    let b = classify::enumerate_all(&SearchConfig::new(3)).unwrap().without_timing();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn pruning_is_sound_and_cheaper() {
    let full = classify::enumerate_all(&SearchConfig::new(3)).unwrap();
    let mut cfg = SearchConfig::new(3).with_threshold(13);
    let pruned = classify::enumerate_all(&cfg).unwrap();
    cfg.prune = false;
    let unpruned = classify::enumerate_all(&cfg).unwrap();
    assert_eq!(pruned.size_histogram, unpruned.size_histogram);
    assert_eq!(pruned.size_histogram, full.size_histogram);
    assert!(pruned.prune_nodes <= unpruned.prune_nodes);

    for t in [9u64, 10, 11, 12] {
        let r = classify::enumerate_all(&SearchConfig::new(3).with_threshold(t)).unwrap();
        let expected: Vec<_> = full.size_histogram.range(..t).map(|(a, b)| (*a, *b)).collect();
        let got: Vec<_> = r.size_histogram.iter().map(|(a, b)| (*a, *b)).collect();
        assert_eq!(got, expected, "threshold {t}");
    }
}

#[test]
fn tighter_thresholds_visit_fewer_nodes() {
    let mut last = 0;
    for t in [8u64, 9, 10, 11, 12, 13] {
        let r = classify::enumerate_all(&SearchConfig::new(3).with_threshold(t)).unwrap();
        assert!(r.prune_nodes >= last, "threshold {t}");
        last = r.prune_nodes;
    }
}

#[test]
fn symmetry_reduction_matches_full_search() {
    for q in [2u32, 3] {
        let full = classify::enumerate_all(&SearchConfig::new(q)).unwrap();
        let mut cfg = SearchConfig::new(q);
        cfg.symmetry_reduction = true;
        let reduced = classify::enumerate_all(&cfg).unwrap();
        assert_eq!(reduced.sets_enumerated, full.sets_enumerated);
        assert_eq!(reduced.size_histogram, full.size_histogram);
        for e in &full.census {
            let c: u64 = reduced
                .census
                .iter()
                .filter(|r| r.size == e.size && r.graph == e.graph)
                .map(|r| r.count)
                .sum();
            assert_eq!(c, e.count, "q={q} size {} graph {}", e.size, e.graph);
        }
    }
}

#[test]
fn budget_and_precondition_errors() {
    assert!(matches!(classify::enumerate_all(&SearchConfig::new(7)), Err(Error::BudgetExceeded(_))));
    assert!(matches!(classify::enumerate_all(&SearchConfig::new(5)), Err(Error::BudgetExceeded(_))));
    assert!(matches!(
        classify::enumerate_all(&SearchConfig::new(3).with_threshold(14)),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        classify::enumerate_all(&SearchConfig::new(3).with_workers(0)),
        Err(Error::Precondition(_))
    ));
}

#[test]
#[ignore = "about 20 s single-threaded"]
fn q5_below_bound() {
    let r = classify::verification_run(5, 1).unwrap();
    let cert = classify::verify_theorem(&r);
    assert!(cert.verified, "{:?}", cert.counterexamples);
    assert_eq!(cert.min_size, Some(21));
}
