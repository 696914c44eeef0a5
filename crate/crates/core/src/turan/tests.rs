use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{brute_canonical_code, is_planar_by_minors, planar_classes_naive};
use super::*;
use crate::corpus::random_triangulation;
use crate::embed::serialize_plg;

fn levels(n: usize) -> Levels {
    planar_levels(n, &SearchOptions::default(), &mut Budget::unlimited()).unwrap()
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (3..=9).map(|n| levels(n).total()).collect();
    assert_eq!(counts, vec![2, 6, 20, 99, 646, 5974, 71885]);
}

#[test]
fn agrees_with_naive_oracle() {
    for n in 3..=6 {
        let mut ours: Vec<u64> = levels(n).codes().map(|c| brute_canonical_code(&graph_from_code(n, c))).collect();
        ours.sort_unstable();
        assert_eq!(ours, planar_classes_naive(n), "n = {n}");
    }
}

#[test]
fn emitted_graphs_are_embedded() {
    let graphs: Vec<PlaneGraph> = enumerate_planar(6).unwrap().collect();
    assert_eq!(graphs.len(), 99);
    for g in &graphs {
        assert_eq!(g.n(), 6);
        let text = serialize_plg(g);
        assert_eq!(crate::embed::parse_plg(text.as_bytes()).unwrap().edge_count(), g.edge_count());
    }
    assert!(graphs.windows(2).all(|w| w[0].edge_count() <= w[1].edge_count()));
}

#[test]
fn range_is_enforced() {
    assert!(matches!(enumerate_planar(2), Err(TuranError::OutOfRange { n: 2 })));
    assert!(matches!(ex_p(11, Pattern::ExactCycle(3)), Err(TuranError::OutOfRange { n: 11 })));
    assert!(matches!(ex_p(5, Pattern::ExactCycle(2)), Err(TuranError::Pattern(_))));
}

#[test]
fn budget_is_a_hard_error() {
    let mut b = Budget::nodes(50);
    let r = planar_levels(7, &SearchOptions::default(), &mut b);
    assert!(matches!(r, Err(TuranError::Budget(_))));
    assert!(b.spent() > 50);
}

fn check_witness(r: &SearchReport) {
    let w = &r.witness;
    assert_eq!(w.n(), r.n);
    assert_eq!(w.edge_count(), r.max_edges);
    let adj = BitGraph::from_plane(w).unwrap();
    assert!(adj.is_connected());
    assert!(!contains_forbidden(adj.masks(), r.pattern).unwrap());
}

#[test]
fn paper_and_small_values() {
    for n in 3..=8 {
        let r = ex_p(n, Pattern::ExactCycle(3)).unwrap();
        assert_eq!(r.max_edges, 2 * n - 4, "n = {n}");
        check_witness(&r);
        assert!(r.all_satisfied());
    }
    let r = ex_p(4, Pattern::ExactCycle(4)).unwrap();
    assert_eq!(r.max_edges, 4);
    let r = ex_p(5, Pattern::Theta(4)).unwrap();
    check_witness(&r);
    assert!(r.max_edges as f64 <= deficiency_bound(5, 4));
    assert!(r.stats.pruned > 0);
}

#[test]
fn deficiency_form_fails_below_k_vertices() {
    // K4 has no 5-cycle, and 6 edges exceed the deficiency form at n = 4
    let r = ex_p(4, Pattern::ExactCycle(5)).unwrap();
    assert_eq!(r.max_edges, 6);
    assert!(6.0 > deficiency_bound(4, 5));
    assert!(r.all_satisfied());
}

#[test]
fn check_bound_examples() {
    for (n, k, family, row) in [
        (6, 4, Family::Cycle, "c4-bound"),
        (8, 4, Family::Theta, "theta-deficiency"),
        (7, 5, Family::Circumference, "circumference-deficiency"),
    ] {
        let r = check_bound(n, k, family).unwrap();
        check_witness(&r);
        let row = r.rows.iter().find(|x| x.name == row).unwrap();
        assert_eq!(row.status, BoundStatus::Satisfied, "{r:?}");
    }
}

/// Largest edge count over all labelled planar graphs on `n` vertices,
/// connected or not, avoiding the pattern.
fn brute_ex(n: usize, pattern: Pattern) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut best = 0;
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if edges.len() <= best {
            continue;
        }
        let g = BitGraph::from_edges(n, &edges);
        if !contains_forbidden(g.masks(), pattern).unwrap() && is_planar_by_minors(n, &edges) {
            best = edges.len();
        }
    }
    best
}

#[test]
fn connected_maximum_equals_unrestricted_maximum() {
    let patterns = [
        Pattern::ExactCycle(3),
        Pattern::ExactCycle(4),
        Pattern::ExactCycle(5),
        Pattern::Theta(4),
        Pattern::Theta(5),
        Pattern::ThetaMember(6, 3),
        Pattern::CircumferenceLess(4),
        Pattern::CircumferenceLess(5),
    ];
    for n in 3..=6 {
        for p in patterns {
            assert_eq!(ex_p(n, p).unwrap().max_edges, brute_ex(n, p), "n = {n}, {p}");
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let run = |jobs| {
        let r = ex_p_with(7, Pattern::ExactCycle(4), &SearchOptions { jobs: Some(jobs) }, &mut Budget::unlimited())
            .unwrap();
        let mut csv = Vec::new();
        write_report_csv(&report_rows(&r, "w.plg"), &mut csv).unwrap();
        (serialize_plg(&r.witness), csv, r.stats)
    };
    assert_eq!(run(1), run(4));
}

/// A random connected planar graph: a random triangulation with random
/// non-bridge edges removed.
fn random_connected_planar(n: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let t = random_triangulation(n, rng);
    let mut adj = BitGraph::from_plane(&t).unwrap().masks().to_vec();
    let drops = rng.gen_range(0..=2 * n - 5);
    for _ in 0..drops {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && adj[a] >> b & 1 == 1 {
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
            if !BitGraph::from_masks(adj.clone()).is_connected() {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    adj
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_connected_planar_graph_is_enumerated(seed in any::<u64>(), n in 3usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let adj = random_connected_planar(n, &mut rng);
        let set: BTreeSet<u64> = levels(n).codes().collect();
        prop_assert!(set.contains(&canonical_code(&adj)));
    }

    #[test]
    fn cycle_maximum_respects_planarity_cap(n in 4usize..=7, k in 3usize..=7) {
        let r = ex_p(n, Pattern::ExactCycle(k)).unwrap();
        prop_assert!(r.max_edges <= 3 * n - 6);
        prop_assert!(r.all_satisfied());
    }
}
