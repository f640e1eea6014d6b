//! The ten acceptance criteria at full bounds — one test, and exactly one
//! pass/fail line, per criterion.  Each test delegates to the library's
//! verification suite so the command-line `selftest` and this target can
//! never drift apart.

use weylgen_core::selftest::{run_criterion, Level};

fn check(id: usize) {
    let report = run_criterion(id, Level::Full);
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {:2} ({}): {status} — {}",
        report.id, report.name, report.detail
    );
    assert!(
        report.passed,
        "criterion {} ({}) failed: {}",
        report.id, report.name, report.detail
    );
}

#[test]
fn criterion_01_three_way_character_equality() {
    check(1);
}

#[test]
fn criterion_02_eigenvalue_identity_residuals() {
    check(2);
}

#[test]
fn criterion_03_dimension_generating_functions() {
    check(3);
}

#[test]
fn criterion_04_multiplicity_generating_functions() {
    check(4);
}

#[test]
fn criterion_05_kostant_partition_closed_forms() {
    check(5);
}

#[test]
fn criterion_06_closed_multiplicity_formulas() {
    check(6);
}

#[test]
fn criterion_07_symmetric_family_diagonal() {
    check(7);
}

#[test]
fn criterion_08_restricted_families_for_b3_and_c3() {
    check(8);
}

#[test]
fn criterion_09_independent_spot_values() {
    check(9);
}

#[test]
fn criterion_10_corruption_negative_controls() {
    check(10);
}
