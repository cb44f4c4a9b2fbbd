//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use binedge::verify::{run_check, VerifyConfig};

fn criterion(id: u8) {
    let r = run_check(id, &VerifyConfig::default()).unwrap();
    let ok = r.passed && r.complete();
    println!(
        "criterion {:>2} {:<48} {} ({} cases, {} ms)",
        r.id,
        r.title,
        if ok { "PASS" } else { "FAIL" },
        r.cases,
        r.elapsed_ms
    );
    for f in &r.failures {
        println!("    failure: {f}");
    }
    for s in &r.skipped {
        println!("    skipped: {s}");
    }
    assert!(ok, "criterion {id} failed: {} failures, {} skipped", r.failure_count, r.skipped.len());
}

#[test]
fn criterion_01_cycle_closure_numbers() {
    criterion(1);
}

#[test]
fn criterion_02_degree_gap_example() {
    criterion(2);
}

#[test]
fn criterion_03_spider_not_3_closed() {
    criterion(3);
}

#[test]
fn criterion_04_caterpillar_dimension() {
    criterion(4);
}

#[test]
fn criterion_05_caterpillar_minimal_primes() {
    criterion(5);
}

#[test]
fn criterion_06_buchberger_oracle() {
    criterion(6);
}

#[test]
fn criterion_07_closed_condition() {
    criterion(7);
}

#[test]
fn criterion_08_tree_criterion() {
    criterion(8);
}

#[test]
fn criterion_09_weakly_closed_bound() {
    criterion(9);
}

#[test]
fn criterion_10_basis_size_identities() {
    criterion(10);
}

#[test]
fn criterion_11_bundled_labelings() {
    criterion(11);
}

#[test]
fn criterion_12_closure_bounds() {
    criterion(12);
}
