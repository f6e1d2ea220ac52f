//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line. `criterion_10_selftest_wall_clock` additionally bounds
//! the wall-clock cost of the whole suite.

use std::time::Instant;

use ocnu::selftest;

fn run(number: u32, name: &str) {
    let start = Instant::now();
    let result = selftest::criterion(number);
    let millis = start.elapsed().as_millis();
    match result {
        Ok(detail) => println!("criterion {number} [{name}]: PASS ({detail}; {millis} ms)"),
        Err(msg) => {
            println!("criterion {number} [{name}]: FAIL ({msg})");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

#[test]
fn criterion_01_published_examples() {
    run(1, "published-example regression");
}

#[test]
fn criterion_02_simple_character_identity() {
    run(2, "simple-character identity over the empty diagram");
}

#[test]
fn criterion_03_verma_oracle_equivalence() {
    run(3, "Verma character vs integer-rank oracle");
}

#[test]
fn criterion_04_gamma_identity() {
    run(4, "gamma slope identity (randomized)");
}

#[test]
fn criterion_05_compatibility() {
    run(5, "core/rec compatibility with the classical maps");
}

#[test]
fn criterion_06_line_classification() {
    run(6, "line classification and disjointness");
}

#[test]
fn criterion_07_degree_bounds() {
    run(7, "degree lower bounds");
}

#[test]
fn criterion_08_length_classification() {
    run(8, "length classification");
}

#[test]
fn criterion_09_symfun_kernel() {
    run(9, "symmetric-function kernel");
}

#[test]
fn criterion_10_selftest_wall_clock() {
    let start = Instant::now();
    let outcomes = selftest::run_all();
    let elapsed = start.elapsed();
    for o in &outcomes {
        assert!(o.passed(), "criterion {} failed: {:?}", o.number, o.result);
    }
    println!(
        "criterion 10 [selftest wall clock]: PASS (criteria 1-9 in {} ms)",
        elapsed.as_millis()
    );
    assert!(
        elapsed.as_secs() < 300,
        "selftest took {} s, budget is 300 s",
        elapsed.as_secs()
    );
}
