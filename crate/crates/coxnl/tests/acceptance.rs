//! The acceptance suite: one test per criterion, each printing its
//! verdict line. These are the same checks `coxnl selftest` runs on the
//! bundled fixtures. A mutex serializes them so the per-criterion time
//! budgets measure real work, not thread contention over the rayon pool.

use std::sync::Mutex;

use coxnl::selftest::{self, CheckResult};

static GATE: Mutex<()> = Mutex::new(());

fn assert_criterion(result: CheckResult) {
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_1_gorenstein_duality() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_gorenstein_duality());
}

#[test]
fn criterion_2_macaulay_random_sequences() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_macaulay_sequences());
}

#[test]
fn criterion_3_tangent_codimension() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_tangent_codimension());
}

#[test]
fn criterion_4_tangent_identification() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_tangent_identification());
}

#[test]
fn criterion_5_degree_bound() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_degree_bound());
}

#[test]
fn criterion_6_emptiness_certificates() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_emptiness_certificates());
}

#[test]
fn criterion_7_invariant_suite() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    assert_criterion(selftest::check_invariant_suite(100));
}
