use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::budget::Budget;
use crate::constructions::{cycle_graph, k4, kleetope, sharp_chain};
use crate::corpus::random_circuit_graph;
use crate::embed::validate_circuit_graph;

fn run_checked(cg: &CircuitGraph, t: usize) -> ExtractTrace {
    let (w, trace) = find_near_triangulation(cg, t).unwrap();
    w.validate(cg.graph(), t).unwrap();
    assert!(w.is_cycle_interior_of(cg.graph()));
    assert!(trace.is_monotone(), "{trace:?}");
    assert!(trace.anomalies.is_empty(), "{:?}", trace.anomalies);
    trace
}

#[test]
fn triangulation_is_returned_whole() {
    let g = kleetope(&k4(), 1).unwrap();
    let cg = circuit_from_outer(&g).unwrap();
    let (w, trace) = find_near_triangulation(&cg, 4).unwrap();
    assert_eq!(w.n(), 8);
    assert!(trace.steps.is_empty());
}

#[test]
fn one_quadrilateral_nine_vertices() {
    // drop the first interior edge of a 9-vertex triangulation that keeps a circuit graph
    let g = kleetope(&k4(), 1).unwrap();
    let g = {
        let mut b = crate::embed::RotationBuilder::from_graph(&g);
        let f = b.face_walk(0, 4);
        b.stack(&f);
        crate::embed::PlaneGraph::new(b.into_rotation(), g.outer().map(|o| o.to_vec())).unwrap()
    };
    let outer = g.outer().unwrap().to_vec();
    let cg = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let sub = g.restrict(|a, b| (a, b) != (u, v), Some((outer[0], outer[1]))).ok()?;
            circuit_from_outer(&sub.graph).ok().filter(|cg| cg.deficiency() == 1 && cg.n() == 9)
        })
        .next()
        .unwrap();
    assert_eq!((cg.n(), cg.deficiency()), (9, 1));
    let trace = run_checked(&cg, 4);
    assert_eq!(trace.steps.len(), 1);
    let oracle = oracle_near_triangulation(cg.graph(), 4, &mut Budget::unlimited()).unwrap();
    assert!(oracle.is_some());
}

#[test]
fn sharp_chain_is_rejected_and_has_no_witness() {
    for (t, i) in [(4, 1), (4, 2), (5, 1), (5, 2)] {
        let cg = sharp_chain(t, i).unwrap();
        assert_eq!((3 * t - 7) * cg.deficiency(), cg.n() - (t - 1));
        assert!(matches!(
            find_near_triangulation(&cg, t),
            Err(ExtractError::PreconditionViolated { .. })
        ));
        let o = oracle_near_triangulation(cg.graph(), t, &mut Budget::unlimited()).unwrap();
        assert!(o.is_none(), "t={t} i={i}");
    }
}

#[test]
fn oracle_examples() {
    let mut b = Budget::unlimited();
    let w = oracle_near_triangulation(&k4(), 4, &mut b).unwrap().unwrap();
    w.validate(&k4(), 4).unwrap();
    assert!(oracle_near_triangulation(&cycle_graph(5), 4, &mut b).unwrap().is_none());
}

#[test]
fn bad_parameters() {
    let cg = circuit_from_outer(&k4()).unwrap();
    assert!(matches!(find_near_triangulation(&cg, 3), Err(ExtractError::PreconditionViolated { .. })));
    assert!(matches!(find_near_triangulation(&cg, 5), Err(ExtractError::PreconditionViolated { .. })));
    let c = cycle_graph(9);
    let cg = validate_circuit_graph(&c, c.outer().unwrap()).unwrap();
    assert_eq!(cg.deficiency(), 6);
    assert!(matches!(find_near_triangulation(&cg, 4), Err(ExtractError::PreconditionViolated { .. })));
}

/// Random circuit graphs satisfying the precondition, with a deficiency
/// budget as large as `n` allows.
fn instances(seed: u64, count: usize, t: usize, max_n: usize) -> Vec<CircuitGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(t..=max_n);
        let max_m = (n - t) / (3 * t - 7);
        let cuts = rng.gen_range(0..=n / 2);
        let cg = random_circuit_graph(n, max_m, cuts, &mut rng);
        if precondition_holds(cg.deficiency(), cg.n(), t) {
            out.push(cg);
        }
    }
    out
}

#[test]
fn random_instances_succeed_and_cover_cases() {
    let mut tags: BTreeMap<CaseTag, usize> = BTreeMap::new();
    let mut actions: BTreeMap<&str, usize> = BTreeMap::new();
    for (seed, t, max_n) in [(1, 4, 24), (2, 5, 30), (3, 4, 30)] {
        for cg in instances(seed, 150, t, max_n) {
            let trace = run_checked(&cg, t);
            for s in &trace.steps {
                *tags.entry(s.case).or_default() += 1;
                *actions.entry(s.action).or_default() += 1;
            }
        }
    }
    eprintln!("case counts: {tags:?} {actions:?}");
    for c in [CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D] {
        assert!(tags.get(&c).copied().unwrap_or(0) > 0, "case {c} never exercised: {tags:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extractor_agrees_with_oracle(seed in any::<u64>()) {
        for cg in instances(seed, 1, 4, 13) {
            let (w, trace) = find_near_triangulation(&cg, 4).unwrap();
            prop_assert!(w.validate(cg.graph(), 4).is_ok());
            prop_assert!(trace.is_monotone());
            let o = oracle_near_triangulation(cg.graph(), 4, &mut Budget::unlimited()).unwrap();
            prop_assert!(o.is_some());
        }
    }
}
