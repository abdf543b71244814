//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line and asserting it. The same checks back `pcomp verify-paper`.

use std::time::{Duration, Instant};

use pcomp_cli::suites::{self, CriterionResult, SuiteOptions};

fn run(
    number: usize,
    budget: Duration,
    f: impl FnOnce(&SuiteOptions) -> CriterionResult,
) -> CriterionResult {
    let opts = SuiteOptions::default();
    let started = Instant::now();
    let result = f(&opts);
    let elapsed = started.elapsed();
    println!(
        "criterion {number} ({}): {} [{} in {:?}]",
        result.name,
        if result.pass { "PASS" } else { "FAIL" },
        result.detail,
        elapsed
    );
    assert!(
        elapsed <= budget,
        "criterion {number} took {elapsed:?}, budget {budget:?}"
    );
    assert!(result.pass, "criterion {number} failed: {}", result.detail);
    result
}

#[test]
fn criterion_01_caterpillar_block_reproduction() {
    run(1, Duration::from_secs(1), |_| {
        suites::caterpillar_block_reproduction()
    });
}

#[test]
fn criterion_02_cycle_realizers() {
    run(2, Duration::from_secs(120), suites::cycle_realizers);
}

#[test]
fn criterion_03_path_realizers() {
    run(3, Duration::from_secs(120), suites::path_realizers);
}

#[test]
fn criterion_04_star_realizers() {
    run(4, Duration::from_secs(60), suites::star_realizers);
}

#[test]
fn criterion_05_k33_empty_realizer() {
    run(5, Duration::from_secs(300), suites::k33_empty_realizer);
}

#[test]
fn criterion_06_caterpillar_realizers() {
    run(6, Duration::from_secs(300), suites::caterpillar_realizers);
}

#[test]
fn criterion_07_constructor_grids() {
    run(7, Duration::from_secs(300), suites::constructor_grids);
}

#[test]
fn criterion_08_condensation() {
    run(8, Duration::from_secs(120), suites::condensation_suite);
}

#[test]
fn criterion_09_psi_cross_check() {
    run(9, Duration::from_secs(600), suites::psi_cross_check);
}

#[test]
fn criterion_10_order_characterizations() {
    run(
        10,
        Duration::from_secs(120),
        suites::order_characterizations,
    );
}

#[test]
fn criterion_11_kary_gap_desk_check() {
    run(11, Duration::from_secs(1), |_| suites::kary_gap_suite());
}

#[test]
fn criterion_12_bridge_identities() {
    run(12, Duration::from_secs(120), suites::bridge_identities);
}
