//! Acceptance gate: twelve fixed-parameter criteria, one test each, so the
//! harness prints one pass/fail line per criterion. Each test also prints a
//! detail line (visible with `--nocapture`) including the elapsed time.
//!
//! Parameters and tolerances are pinned here as named constants; the
//! underlying suites live in `ratbase::checks` so the CLI `check` command
//! runs exactly the same code.

use std::time::{Duration, Instant};

use num::BigRational;
use ratbase::checks::{self, CheckReport};

/// Prints the criterion line and enforces the verdict and time budget.
fn finish(idx: u32, report: &CheckReport, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    println!(
        "criterion {idx:02} {} ({:.2}s) — {}",
        if report.passed() { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        report.line()
    );
    assert!(report.passed(), "criterion {idx:02}: {}", report.line());
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {idx:02} exceeded its {:?} budget: took {:?}",
            limit,
            elapsed
        );
    }
}

/// Worked-example words for base 3/2 must come out digit for digit.
#[test]
fn criterion_01_worked_example_words() {
    let started = Instant::now();
    let report = checks::golden_examples();
    finish(1, &report, started, Some(Duration::from_secs(1)));
}

/// Successor transduction: state 0 maps bottom(n) to bottom(n+1).
/// Exhaustive over five bases, n ≤ 2000, prefix length 64; zero tolerance.
#[test]
fn criterion_02_successor_transduction() {
    const N_MAX: u64 = 2000;
    const PREFIX_LEN: usize = 64;
    let started = Instant::now();
    let report = checks::successor_identity(N_MAX, PREFIX_LEN);
    finish(2, &report, started, Some(Duration::from_secs(30)));
}

/// Shifted transduction: state i maps bottom(n) to bottom(n+i+1).
#[test]
fn criterion_03_shifted_transduction() {
    const I_MAX: u64 = 50;
    const N_MAX: u64 = 500;
    const PREFIX_LEN: usize = 32;
    let started = Instant::now();
    let report = checks::shifted_successor(I_MAX, N_MAX, PREFIX_LEN);
    finish(3, &report, started, Some(Duration::from_secs(60)));
}

/// Every span word labels a span-automaton run from state 0.
#[test]
fn criterion_04_span_words_label_runs() {
    const N_MAX: u64 = 2000;
    const PREFIX_LEN: usize = 64;
    let started = Instant::now();
    let report = checks::span_labels(N_MAX, PREFIX_LEN);
    finish(4, &report, started, Some(Duration::from_secs(30)));
}

/// The letterwise shift μ carries top(n) onto bottom(n+1).
#[test]
fn criterion_05_top_bottom_shift() {
    const N_MAX: u64 = 5000;
    const PREFIX_LEN: usize = 64;
    let started = Instant::now();
    let report = checks::top_bottom_shift(N_MAX, PREFIX_LEN);
    finish(5, &report, started, None);
}

/// Radix order on representations matches integer order on all pairs.
#[test]
fn criterion_06_order_transfer() {
    const N_MAX: u64 = 5000;
    let started = Instant::now();
    let report = checks::radix_order(N_MAX);
    finish(6, &report, started, None);
}

/// The congruence lemmas, exhaustively at small length: future labels
/// (mod q^k, k ≤ 4), incoming paths (mod p^k, k ≤ 3), window bijections
/// (k ≤ 3), and aperiodicity of nonzero labels (|u| ≤ 4) — all over
/// states ≤ 2000.
#[test]
fn criterion_07_congruence_lemmas() {
    const N_MAX: u64 = 2000;
    let started = Instant::now();
    let reports = [
        checks::congruence_future(N_MAX, 4),
        checks::congruence_past(N_MAX, 3),
        checks::interval_bijection(3, &[0, 1, 137]),
        checks::no_periodic_labels(N_MAX, 4),
    ];
    let merged = CheckReport {
        name: "congruence-lemmas",
        cases: reports.iter().map(|r| r.cases).sum(),
        failures: reports.iter().map(|r| r.failures).sum(),
        first_failure: reports.iter().find_map(|r| r.first_failure.clone()),
        summary: "future/past congruences, window bijection, aperiodicity".into(),
    };
    finish(7, &merged, started, None);
}

/// Interval-regime bases (3/2 and 4/3): the exhaustive no-shortcut report
/// passes at word length 12.
#[test]
fn criterion_08_interval_regime() {
    const MAX_LEN: usize = 12;
    let started = Instant::now();
    let report = checks::interval_regime(MAX_LEN);
    finish(8, &report, started, Some(Duration::from_secs(60)));
}

/// Sparse-regime measure decay: for 7/3 the escape length is 3 (2³ = 8 ≥ 6),
/// the certified contraction factor is below 1, and outer measures of the
/// every-third refinement levels decay geometrically, three steps deep, at
/// enclosure depth 40.
#[test]
fn criterion_09_measure_decay() {
    const ENCLOSURE_DEPTH: usize = 40;
    const STEPS: u32 = 3;
    let started = Instant::now();
    let report = checks::contraction_decay(ENCLOSURE_DEPTH, STEPS);
    finish(9, &report, started, Some(Duration::from_secs(120)));
}

/// Span positivity: γ-lower > 0 at depth 40 and every span enclosure for
/// n ≤ 1000 lies inside [γ-lower, ω-upper].
#[test]
fn criterion_10_span_positivity() {
    const N_MAX: u64 = 1000;
    const ENCLOSURE_DEPTH: usize = 40;
    let started = Instant::now();
    let report = checks::span_bounds(N_MAX, ENCLOSURE_DEPTH);
    finish(10, &report, started, None);
}

/// Dimension bounds for 7/3: box-counting ratios at depths 10..=14 sit
/// under the branching bound plus the published 1/20 tolerance (absorbing
/// finite-depth effects), and the branching bound is strictly below the
/// word-count bound.
#[test]
fn criterion_11_dimension_bounds() {
    let started = Instant::now();
    // The tolerance the report itself publishes: 0.05.
    assert_eq!(checks::box_ratio_tolerance(), BigRational::new(1.into(), 20.into()));
    let report = checks::dimension_bounds_consistency();
    finish(11, &report, started, Some(Duration::from_secs(60)));
}

/// Randomized enclosure soundness: 10⁴ seeded (base, n, k ≤ 40) triples;
/// the (k+10)-digit enclosure always nests inside the k-digit one.
#[test]
fn criterion_12_enclosure_soundness() {
    const SAMPLES: u32 = 10_000;
    const SEED: u64 = 0x2026_0818;
    let started = Instant::now();
    let report = checks::enclosure_soundness(SAMPLES, SEED);
    finish(12, &report, started, None);
}
