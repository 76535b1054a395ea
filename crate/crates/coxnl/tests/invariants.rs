//! Module invariants under seeded random trials, grouped by the module
//! under test. Each property draws its own deterministic RNG stream, so
//! the groups can run in parallel and still reproduce exactly.

use coxnl::selftest::property_checks;

const TRIALS: usize = 100;

fn run_group(prefix: &str) {
    let mut ran = 0;
    let mut failures = Vec::new();
    for (name, check) in property_checks() {
        if !name.starts_with(prefix) {
            continue;
        }
        ran += 1;
        match check(TRIALS) {
            None => println!("{name}: ok ({TRIALS} trials)"),
            Some(why) => failures.push(format!("{name}: {why}")),
        }
    }
    assert!(ran > 0, "no properties registered under `{prefix}`");
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn linalg_properties() {
    run_group("linalg:");
}

#[test]
fn fan_properties() {
    run_group("fan:");
}

#[test]
fn cox_properties() {
    run_group("cox:");
}

#[test]
fn ideal_properties() {
    run_group("ideal:");
}

#[test]
fn gorenstein_properties() {
    run_group("gorenstein:");
}

#[test]
fn chow_properties() {
    run_group("chow:");
}

#[test]
fn nl_properties() {
    run_group("nl:");
}
