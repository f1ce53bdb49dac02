//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use wiener_polarity::chem::{build, closed_form_report, parse_spec, SystemKind};
use wiener_polarity::cycles::enumerate_cycles;
use wiener_polarity::extremal::{
    agreement_sweep, enumerate_catafused, generate_family, verify_extremal, FamilyClass,
    DEFAULT_MAX_H,
};
use wiener_polarity::graph::{parse_edge_list, Graph};
use wiener_polarity::indices::{
    first_zagreb, full_report, second_zagreb, wiener_polarity_formula, wiener_polarity_oracle,
    FormulaError,
};

use common::{
    built_systems, random_connected_graph, structured_graphs, subset_cycle_count, H6_EXAMPLE_SPEC,
};

const KINDS: [SystemKind; 2] = [SystemKind::Benzenoid, SystemKind::Phenylene];

fn h_range(kind: SystemKind, max_h: usize) -> std::ops::RangeInclusive<usize> {
    match kind {
        SystemKind::Benzenoid => 1..=max_h,
        SystemKind::Phenylene => 2..=max_h,
    }
}

/// The deterministic random corpus shared by criteria 3, 4, and 8:
/// 500 connected triangle-free graphs on at most 14 vertices that pass the
/// formula preconditions, plus every precondition-failing graph encountered
/// on the way.
fn random_corpus() -> (Vec<Graph>, Vec<Graph>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut passing = Vec::new();
    let mut failing = Vec::new();
    let mut attempts = 0;
    while passing.len() < 500 {
        attempts += 1;
        assert!(attempts < 20_000, "corpus generation stalled");
        let n = rng.gen_range(4..=14);
        let extra = rng.gen_range(0.05..0.45);
        let g = random_connected_graph(&mut rng, n, extra, true);
        let report = full_report(&g).unwrap();
        if report.preconditions_pass() {
            passing.push(g);
        } else {
            failing.push(g);
        }
    }
    (passing, failing)
}

#[test]
fn criterion_1_example_system_values() {
    let start = Instant::now();

    let benzenoid = build(&parse_spec(H6_EXAMPLE_SPEC, SystemKind::Benzenoid).unwrap()).unwrap();
    let p = &benzenoid.profile;
    assert_eq!((p.h, p.t, p.b, p.a, p.l, p.s), (6, 3, 1, 1, 1, 4));
    assert_eq!(closed_form_report(p, SystemKind::Benzenoid).unwrap().wp, 52);
    assert_eq!(wiener_polarity_formula(&benzenoid.graph).unwrap(), 52);
    assert_eq!(wiener_polarity_oracle(&benzenoid.graph).unwrap(), 52);

    let phenylene = build(&parse_spec(H6_EXAMPLE_SPEC, SystemKind::Phenylene).unwrap()).unwrap();
    let p = &phenylene.profile;
    assert_eq!((p.h, p.t, p.b, p.a, p.l, p.s), (6, 3, 1, 1, 1, 4));
    assert_eq!(closed_form_report(p, SystemKind::Phenylene).unwrap().wp, 72);
    assert_eq!(wiener_polarity_formula(&phenylene.graph).unwrap(), 72);
    assert_eq!(wiener_polarity_oracle(&phenylene.graph).unwrap(), 72);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("[PASS] criterion 1: h=6 example gives W_p 52 (benzenoid) and 72 (phenylene) three ways in {elapsed:?}");
}

#[test]
fn criterion_2_formula_oracle_equivalence_sweep() {
    let start = Instant::now();
    let mut checked = 0;
    for kind in KINDS {
        for h in h_range(kind, 6) {
            let sweep = agreement_sweep(h, kind, DEFAULT_MAX_H).unwrap();
            assert!(sweep.passed(), "{kind} h={h}: {:?}", sweep.mismatches);
            checked += sweep.system_count;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("[PASS] criterion 2: closed form = formula = oracle on {checked} systems (h <= 6, both kinds) in {elapsed:?}");
}

#[test]
fn criterion_3_generic_graph_property_suite() {
    let (passing, failing) = random_corpus();
    assert!(passing.len() >= 500);
    let mut with_cycles = 0;
    for g in &passing {
        let formula = wiener_polarity_formula(g).unwrap();
        let oracle = wiener_polarity_oracle(g).unwrap();
        assert_eq!(formula, oracle, "on {}", g.to_edge_list());
        if g.edge_count() >= g.vertex_count() {
            with_cycles += 1;
        }
    }
    assert!(
        with_cycles >= 100,
        "corpus too tree-heavy: only {with_cycles} cyclic graphs"
    );

    // every precondition violator refuses instead of producing a number
    for g in failing
        .iter()
        .chain(structured_graphs().iter().filter_map(|(name, g)| {
            matches!(*name, "K2,3" | "cube" | "petersen" | "theta_2_2_2").then_some(g)
        }))
    {
        assert!(matches!(
            wiener_polarity_formula(g),
            Err(FormulaError::PreconditionsViolated { .. })
        ));
    }

    // K2,3 specifically: the raw right-hand side would claim -6 against a
    // true value of 0
    let k23 = parse_edge_list("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap();
    let report = full_report(&k23).unwrap();
    let raw = report.m2
        - report.m1
        - report.f
        - 4 * report.c4 as i64
        - 5 * report.c5 as i64
        - 3 * report.c6 as i64
        + report.edge_count as i64;
    assert_eq!(raw, -6);
    assert_eq!(report.wp_oracle, 0);
    assert!(report.wp_formula.is_none());

    println!(
        "[PASS] criterion 3: formula = oracle on {} random precondition-passing graphs; {} violators all refused (K2,3 raw value -6 vs oracle 0)",
        passing.len(),
        failing.len() + 4
    );
}

#[test]
fn criterion_4_identity_suite() {
    let (passing, failing) = random_corpus();
    let mut corpus: Vec<Graph> = Vec::new();
    corpus.extend(structured_graphs().into_iter().map(|(_, g)| g));
    corpus.extend(built_systems(6).into_iter().map(|(_, g)| g));
    corpus.extend(passing);
    corpus.extend(failing);

    let mut decomposed = 0;
    for g in &corpus {
        // Zagreb edge-sum identity
        let edge_sum: i64 = g
            .edges()
            .map(|(u, v)| g.degree(u) as i64 + g.degree(v) as i64)
            .sum();
        assert_eq!(first_zagreb(g), edge_sum);

        let report = full_report(g).unwrap();
        // p3 identity
        assert_eq!(report.p3, report.m2 - report.m1 + report.edge_count as i64);
        // proof decomposition on precondition-passing graphs
        if report.preconditions_pass() {
            let value = report.p3
                - report.f
                - 3 * report.c6 as i64
                - 4 * report.c4 as i64
                - 5 * report.c5 as i64;
            assert_eq!(value, report.wp_oracle);
            decomposed += 1;
        }
    }
    println!(
        "[PASS] criterion 4: Zagreb and p3 identities on {} graphs; decomposition on {decomposed} precondition-passing ones",
        corpus.len()
    );
}

#[test]
fn criterion_5_structural_count_suite() {
    let mut checked = 0;
    for kind in KINDS {
        for h in h_range(kind, 6) {
            for sys in enumerate_catafused(h, kind).unwrap() {
                let g = &sys.graph;
                let p = &sys.profile;
                let n3 = g.vertices().filter(|&v| g.degree(v) == 3).count();
                let n2 = g.vertices().filter(|&v| g.degree(v) == 2).count();
                let closed = closed_form_report(p, kind).unwrap();
                match kind {
                    SystemKind::Benzenoid => {
                        assert_eq!(g.vertex_count(), 4 * h + 2);
                        assert_eq!(g.edge_count(), 5 * h + 1);
                        assert_eq!(n3, 2 * h - 2);
                        assert_eq!(n2, 2 * h + 4);
                        assert_eq!(closed.m1, 26 * h as i64 - 2);
                        assert_eq!(closed.m2, (33 * h + p.s + p.b) as i64 - 10);
                    }
                    SystemKind::Phenylene => {
                        assert_eq!(g.vertex_count(), 6 * h);
                        assert_eq!(g.edge_count(), 8 * h - 2);
                        assert_eq!(n3, 4 * h - 4);
                        assert_eq!(n2, 2 * h + 4);
                        assert_eq!(closed.m1, 44 * h as i64 - 20);
                        assert_eq!(closed.m2, (60 * h + p.s + p.b) as i64 - 37);
                    }
                }
                assert_eq!(closed.m1, first_zagreb(g));
                assert_eq!(closed.m2, second_zagreb(g));
                checked += 1;
            }
        }
    }
    println!("[PASS] criterion 5: vertex/edge/degree counts and Zagreb closed forms exact on {checked} built systems");
}

#[test]
fn criterion_6_lemma_suite() {
    let mut systems = 0;
    let mut family_members = 0;
    for kind in KINDS {
        for h in 2..=7 {
            for sys in enumerate_catafused(h, kind).unwrap() {
                let p = &sys.profile;
                assert_eq!(2 * p.b + p.a, p.s - 1);
                assert_eq!(p.b + 2, p.t);
                assert!(p.s <= h - 1);
                systems += 1;
            }
            for member in generate_family(h, kind, FamilyClass::MaxWp).unwrap() {
                assert_eq!(member.profile.s, h - 1, "{kind} h={h}");
                family_members += 1;
            }
        }
    }
    println!("[PASS] criterion 6: 2b+a = s-1, b+2 = t, s <= h-1 on {systems} systems; s = h-1 on {family_members} maximal-family members");
}

#[test]
fn criterion_7_extremal_theorems() {
    let start = Instant::now();
    for kind in KINDS {
        for h in 2..=7 {
            let report = verify_extremal(h, kind).unwrap();
            assert!(
                report.passed(),
                "{kind} h={h}: {:?}",
                report.counterexamples
            );
            assert!(report.min_unique_is_linear);
            assert!(report.max_set_equals_family);
            if h % 2 == 1 {
                assert_eq!(report.near_max_consistent, Some(true));
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("[PASS] criterion 7: minimum = linear chain (unique), maximum = branching family, near-maximal families consistent, for 2 <= h <= 7, both kinds, in {elapsed:?}");
}

#[test]
fn criterion_8_cycle_enumeration_oracle_equivalence() {
    let (passing, failing) = random_corpus();
    let mut corpus: Vec<Graph> = Vec::new();
    corpus.extend(structured_graphs().into_iter().map(|(_, g)| g));
    corpus.extend(built_systems(2).into_iter().map(|(_, g)| g));
    corpus.extend(passing);
    corpus.extend(failing);

    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.vertex_count() <= 12) {
        for k in 3..=6 {
            assert_eq!(
                enumerate_cycles(g, k).unwrap().len(),
                subset_cycle_count(g, k),
                "k={k} on {}",
                g.to_edge_list()
            );
        }
        checked += 1;
    }
    assert!(checked >= 100, "only {checked} small graphs in the corpus");
    println!("[PASS] criterion 8: DFS cycle counts match the subset brute force for k = 3..6 on {checked} graphs");
}
