//! Acceptance suite: runs every verification criterion at its stated time
//! budget and prints one pass/fail line per criterion. `cargo test -p
//! feulerian-cli --test acceptance -- --nocapture` shows the lines.

use feulerian_cli::suite::{self, CriterionOutcome};

fn check(outcome: CriterionOutcome) {
    println!("{}", outcome.line());
    assert!(
        outcome.passed,
        "criterion {} failed: {}",
        outcome.index, outcome.detail
    );
    assert!(
        outcome.elapsed <= outcome.budget,
        "criterion {} exceeded its {:?} budget: {:?}",
        outcome.index,
        outcome.budget,
        outcome.elapsed
    );
}

#[test]
fn criterion_01_worked_examples_bit_exact() {
    check(suite::criterion_1());
}

#[test]
fn criterion_02_five_route_agreement() {
    check(suite::criterion_2());
}

#[test]
fn criterion_03_values_at_one() {
    check(suite::criterion_3());
}

#[test]
fn criterion_04_palindromicity_and_pairing() {
    check(suite::criterion_4());
}

#[test]
fn criterion_05_zero_location_suite() {
    check(suite::criterion_5());
}

#[test]
fn criterion_06_route_equivalence_random() {
    check(suite::criterion_6(0));
}

#[test]
fn criterion_07_transformation_suite() {
    check(suite::criterion_7(0));
}

#[test]
fn criterion_08_total_positivity_windows() {
    check(suite::criterion_8());
}

#[test]
fn criterion_09_quadratic_criterion_grid() {
    check(suite::criterion_9(1));
}

#[test]
fn criterion_10_noncanonical_and_connections() {
    check(suite::criterion_10());
}
