mod common;

use common::*;
use sop_core::noether::{find_partial_sop, SearchConfig};
use sop_core::sieve::*;
use sop_core::{Budget, ProjScheme};

/// Instances small enough to enumerate: (label, scheme, d, k).
fn exhaustive_instances() -> Vec<(&'static str, ProjScheme, u32, usize)> {
    let two_lines = || scheme(2, 1, 2, &["x*y"], Some(2));
    let p1 = || scheme(2, 1, 1, &[], Some(1));
    let p1_f3 = || scheme(3, 1, 1, &[], Some(1));
    let xyz = || scheme(2, 1, 3, &["x*y*z"], Some(3));
    vec![
        ("V(xy) d=1 k=0", two_lines(), 1, 0),
        ("V(xy) d=1 k=1", two_lines(), 1, 1),
        ("V(xy) d=2 k=0", two_lines(), 2, 0),
        ("V(xy) d=2 k=1", two_lines(), 2, 1),
        ("P^1 d=1 k=1", p1(), 1, 1),
        ("P^1 d=3 k=0", p1(), 3, 0),
        ("P^1 d=3 k=1", p1(), 3, 1),
        ("P^1/F_3 d=2 k=1", p1_f3(), 2, 1),
        ("V(xyz) d=1 k=0", xyz(), 1, 0),
        ("V(xyz) d=1 k=1", xyz(), 1, 1),
        ("V(xyz) d=2 k=0", xyz(), 2, 0),
    ]
}

#[test]
fn monte_carlo_agrees_with_enumeration() {
    let b = Budget::default();
    for (label, x, d, k) in exhaustive_instances() {
        let exact = exact_prob_params(&x, d, k, &b, 1).unwrap();
        let cfg = TrialConfig { d, k, trials: 10_000, master_seed: 2024, workers: 1 };
        let est = estimate_prob_params(&x, &cfg).unwrap();
        // a zero-variance estimate must hit the exact value on the nose
        let margin = (5.0 * est.stderr).max(1e-12);
        assert!((est.p_hat - exact.value()).abs() <= margin, "{label}: {} vs {}", est.p_hat, exact.value());
    }
}

#[test]
fn hand_computed_probabilities() {
    let b = Budget::default();
    let two_lines = scheme(2, 1, 2, &["x*y"], Some(2));
    assert_eq!(exact_prob_params(&two_lines, 1, 0, &b, 1).unwrap().reduced(), (5, 8));
    // P^1, d=1, k=1: the pair must have no common zero, i.e. be independent
    let p1 = scheme(2, 1, 1, &[], Some(1));
    assert_eq!(exact_prob_params(&p1, 1, 1, &b, 1).unwrap().reduced(), (3, 8));
}

#[test]
fn lower_bound_holds_on_every_exhaustive_instance() {
    let b = Budget::default();
    // the bound is stated for k < n
    for (label, x, d, k) in exhaustive_instances().into_iter().filter(|i| (i.3 as i32) < i.1.n()) {
        let exact = exact_prob_params(&x, d, k, &b, 1).unwrap();
        let check = check_prop51_bound(&x, d, k, &Measurement::Exact(exact)).unwrap();
        assert!(check.holds, "{label}: bound {} > {}", check.bound, check.measured);
    }
}

#[test]
fn failure_rate_decreases_with_degree() {
    let fixtures = [scheme(2, 1, 3, &["x*y*z"], Some(3)), scheme(3, 1, 3, &["x^2 + y^2 + z^2"], Some(2))];
    for x in fixtures {
        let rates: Vec<ProbEstimate> = (2..=4)
            .map(|d| estimate_prob_params(&x, &TrialConfig { d, k: 1, trials: 20_000, master_seed: 5, workers: 1 }).unwrap())
            .collect();
        for w in rates.windows(2) {
            let slack = 5.0 * (w[0].stderr.powi(2) + w[1].stderr.powi(2)).sqrt();
            assert!(w[1].failure() <= w[0].failure() + slack, "{} then {}", w[0].failure(), w[1].failure());
        }
    }
}

#[test]
fn single_trial_searches_succeed_at_the_bound_rate() {
    // V(xy), d = 3, k = 0: bound 1 - 2·2^{-4}
    let x = scheme(2, 1, 2, &["x*y"], Some(2));
    let runs = 1000u64;
    let successes = (0..runs)
        .filter(|&i| {
            let cfg = SearchConfig { max_trials: 1, master_seed: 11, stream_base: i, workers: 1 };
            find_partial_sop(&x, 3, &cfg).unwrap().is_some()
        })
        .count() as u64;
    let est = ProbEstimate::from_counts(successes, runs);
    let bound = prop51_bound(&x, 3, 0).unwrap().value;
    assert_eq!(bound, 0.875);
    assert!(est.p_hat + 5.0 * est.stderr >= bound, "{} < {bound}", est.p_hat);
}
