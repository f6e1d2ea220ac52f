//! End-to-end tests of the binary: documented examples, exit codes, JSON
//! round-trips, and the selftest gate.

use std::process::{Command, Output};
use std::time::Instant;

use num_traits::Zero;
use ocnu::partition::Partition;
use ocnu::symfun::QSeries;
use ocnu::Rat;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ocnu"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("OCNU_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout_text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

// --- parsers for the emitted JSON forms -----------------------------------

fn parse_partition(v: &Value) -> Partition {
    let parts = v
        .as_array()
        .expect("partition is an array")
        .iter()
        .map(|x| u32::try_from(x.as_u64().expect("part")).unwrap())
        .collect();
    Partition::try_new(parts).expect("valid partition")
}

fn parse_rational(v: &Value) -> Rat {
    let num: ocnu::Int = v["num"].as_str().unwrap().parse().unwrap();
    let den: ocnu::Int = v["den"].as_str().unwrap().parse().unwrap();
    Rat::new(num, den)
}

fn parse_qseries(v: &Value) -> QSeries {
    let coeffs: Vec<Rat> = v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let trunc = v["trunc"].as_u64().unwrap() as usize;
    assert_eq!(coeffs.len(), trunc + 1);
    QSeries::from_coeffs(coeffs)
}

// --- documented examples ---------------------------------------------------

#[test]
fn gamma_example() {
    let v = stdout_json(&[
        "diagram", "gamma", "--tau", "2,1", "--s", "1", "--l", "1", "--json",
    ]);
    assert_eq!(v["diagram"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["j_s"], 1);
    assert_eq!(v["k_insert"], 1);
}

#[test]
fn l_empty_example() {
    let v = stdout_json(&[
        "char", "l-empty", "--mu", "1", "--k", "2", "--N", "6", "--json",
    ]);
    let coeffs: Vec<&str> = v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "1", "0", "1", "0", "1", "0"]);
}

#[test]
fn core_example_text() {
    let out = stdout_text(&["diagram", "core", "--tau", "8,5,4,3,3,2", "--s", "22"]);
    assert_eq!(out.trim(), "(7,4,3,2,2,2,2)");
}

#[test]
fn cset_example() {
    let v = stdout_json(&[
        "diagram",
        "cset",
        "--tau",
        "8,5,4,3,3,2",
        "--max",
        "33",
        "--json",
    ]);
    let members: Vec<i64> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(members, [19, 20, 22, 25, 27, 29, 30, 31, 33]);
}

#[test]
fn classify_point_reducible() {
    // c' = 1/2 = (nu - 0)/5 at nu = 5/2: the one-cell weight in degree 5.
    let v = stdout_json(&[
        "point",
        "classify",
        "--tau",
        "empty",
        "--c-prime",
        "1/2",
        "--nu",
        "5/2",
        "--bound",
        "4",
        "--json",
    ]);
    assert_eq!(v["verdict"], "Reducible");
    let first = &v["certified"][0];
    assert_eq!(first["mu"], serde_json::json!([1]));
    assert_eq!(first["m"], 5);
    assert_eq!(first["s"], 0);
    assert_eq!(first["r"], 5);
    // Supplying c instead of c' gives the same report.
    let w = stdout_json(&[
        "point", "classify", "--tau", "empty", "--c", "2", "--nu", "5/2", "--bound", "4", "--json",
    ]);
    assert_eq!(v, w);
}

#[test]
fn classify_generic_and_czero() {
    let v = stdout_json(&["point", "classify", "--tau", "2,1", "--generic", "--json"]);
    assert_eq!(v["verdict"], "SimpleCertified");
    let v = stdout_json(&["singular", "--tau", "2,1", "--c", "0", "--json"]);
    assert_eq!(v["verdict"], "SimpleCertified");
}

#[test]
fn length_example() {
    let v = stdout_json(&[
        "length", "classify", "--tau", "empty", "--c", "-2/3", "--nu", "1/2", "--json",
    ]);
    assert_eq!(v["verdict"], "Infinite");
    assert_eq!(v["start"], 2);
    assert_eq!(v["step"], 3);
    assert_eq!(v["first_r"], serde_json::json!(["1", "3", "5"]));
}

#[test]
fn exit_codes() {
    // Usage error: unknown flag value type.
    let out = run(&["diagram", "core", "--tau", "2,x", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("'x'"), "offending token reported: {err}");
    assert!(err.contains("usage:"), "grammar reported: {err}");
    // Domain error: inadmissible s.
    let out = run(&["diagram", "core", "--tau", "2,1", "--s", "2"]);
    assert_eq!(out.status.code(), Some(3));
    // Domain error: invalid partition shape.
    let out = run(&["diagram", "transpose", "--lambda", "1,2"]);
    assert_eq!(out.status.code(), Some(3));
    // Success.
    let out = run(&["diagram", "transpose", "--lambda", "6,5,4,1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deterministic_output() {
    let args = [
        "char",
        "verma",
        "--tau",
        "1",
        "--bound",
        "3",
        "--N",
        "6",
        "--c-prime",
        "2",
        "--nu",
        "7/2",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

// --- round-trips ------------------------------------------------------------

#[test]
fn partition_roundtrip() {
    for parts in ["empty", "1", "6,5,4,1", "3,3,3", "10,1,1,1,1"] {
        let v = stdout_json(&["diagram", "transpose", "--lambda", parts, "--json"]);
        let transposed = parse_partition(&v);
        let v2 = stdout_json(&[
            "diagram",
            "transpose",
            "--lambda",
            &if transposed.is_empty() {
                "empty".to_string()
            } else {
                transposed
                    .parts()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            },
            "--json",
        ]);
        let back = parse_partition(&v2);
        let original = if parts == "empty" {
            Partition::empty()
        } else {
            Partition::try_new(parts.split(',').map(|p| p.parse().unwrap()).collect()).unwrap()
        };
        assert_eq!(back, original);
    }
}

#[test]
fn rational_and_series_roundtrip() {
    let v = stdout_json(&[
        "line",
        "intersect",
        "--tau",
        "empty",
        "--mu",
        "1",
        "--m",
        "1",
        "--tau2",
        "empty",
        "--mu2",
        "2",
        "--m2",
        "4",
        "--json",
    ]);
    assert_eq!(v["result"], "point");
    let c_prime = parse_rational(&v["c_prime"]);
    let nu = parse_rational(&v["nu"]);
    assert_eq!(c_prime, Rat::from_integer((-1).into()));
    assert_eq!(nu, Rat::from_integer((-1).into()));

    let v = stdout_json(&[
        "classical",
        "char",
        "--mu",
        "4",
        "--tau",
        "4",
        "--n",
        "4",
        "--N",
        "8",
        "--json",
    ]);
    let series = parse_qseries(&v);
    assert_eq!(series.trunc(), 8);
    assert!(!series.coeff(0).is_zero());
    // Emitting the same series again is byte-identical.
    let again = stdout_text(&[
        "--json",
        "classical",
        "char",
        "--mu",
        "4",
        "--tau",
        "4",
        "--n",
        "4",
        "--N",
        "8",
    ]);
    let first = stdout_text(&[
        "classical",
        "char",
        "--mu",
        "4",
        "--tau",
        "4",
        "--n",
        "4",
        "--N",
        "8",
        "--json",
    ]);
    assert_eq!(again, first);
}

#[test]
fn rational_emission_shape() {
    // h = (5-1)/2 - C((1), 5)/2 = -1/2: lowest terms, positive denominator.
    let v = stdout_json(&[
        "char",
        "verma",
        "--tau",
        "1",
        "--mu",
        "1",
        "--c-prime",
        "2",
        "--nu",
        "5",
        "--N",
        "3",
        "--json",
    ]);
    assert_eq!(v["h"], serde_json::json!({"num": "-1", "den": "2"}));
    assert_eq!(parse_rational(&v["h"]), Rat::new((-1).into(), 2.into()));
    assert_eq!(
        parse_qseries(&v["series"]).coeff(0),
        &Rat::from_integer(1.into())
    );
}

#[test]
fn config_file_defaults() {
    let dir = std::env::temp_dir().join("ocnu-config-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(&path, r#"{"truncation": 4, "format": "json"}"#).unwrap();
    let out = bin()
        .args(["char", "l-empty", "--mu", "1", "--k", "2"])
        .env("OCNU_CONFIG", &path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["trunc"], 4, "config file truncation applies");
    // Flags override the config file.
    let out = bin()
        .args(["char", "l-empty", "--mu", "1", "--k", "2", "--N", "6"])
        .env("OCNU_CONFIG", &path)
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["trunc"], 6);
}

#[test]
fn selftest_gate() {
    let start = Instant::now();
    let out = run(&["selftest"]);
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    for n in 1..=9 {
        assert!(
            text.contains(&format!("criterion {n} ")),
            "criterion {n} missing from:\n{text}"
        );
    }
    assert!(text.contains("9/9 criteria passed"), "{text}");
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(
        elapsed.as_secs() < 300,
        "selftest took {} s, budget is 300 s",
        elapsed.as_secs()
    );
}
