//! End-to-end runs of the `jumploci` binary: file formats, reports and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn jumploci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumploci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PROP21_G1: &str = r#"{"kind": "prop21",
  "complex": {"ring": ["x"], "lo": 0, "hi": 1, "ranks": [1, 1], "diff": {"0": [["x"]]}},
  "algebra": {"vars": ["e"], "rel": ["e^2"]},
  "map": {"point": ["0"], "images": [["0", "1"]]},
  "i": 1, "k": 1,
  "expected": {"side_i": false, "side_ii": false, "equivalent": true}}"#;

const ANISOTROPIC: &str = r#"{"q": 2, "dims": {"prev": 0, "i": 0, "next": 0, "h2": 1},
  "mu2": [[["1"], ["0"]], [["0"], ["1"]]], "act_prev": [[], []], "act_i": [[], []]}"#;

#[test]
fn koszul_file_round_trips_through_jump_ideal() {
    let dir = TempDir::new().unwrap();
    let k2 = dir.path().join("k2.json");
    assert_eq!(code(&jumploci(&["koszul", "--g", "2", "-o", s(&k2)])), 0);
    let out = jumploci(&["jump-ideal", s(&k2), "--i", "1", "--k", "1"]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!(r["linear"], true);
    assert_eq!(r["ideal"]["gens"].as_array().unwrap().len(), 2);

    // the minors-of-blockdiag variant gives m^2 here: same zero set, different ideal
    let alt = stdout_json(&jumploci(&[
        "jump-ideal",
        s(&k2),
        "--i",
        "1",
        "--k",
        "1",
        "--alt",
    ]));
    assert_eq!(alt["alt"], true);
    assert_eq!(alt["linear"], false);
    assert_eq!(alt["ideal"]["gens"].as_array().unwrap().len(), 3);
}

#[test]
fn fiber_dims_at_origin_and_generic_point() {
    let dir = TempDir::new().unwrap();
    let k2 = dir.path().join("k2.json");
    jumploci(&["koszul", "--g", "2", "-o", s(&k2)]);
    let origin = stdout_json(&jumploci(&[
        "fiber-dims",
        s(&k2),
        "--point",
        "0,0",
        "--i",
        "1",
    ]));
    assert_eq!(origin["dims"]["1"], 2);
    let generic = stdout_json(&jumploci(&[
        "fiber-dims",
        s(&k2),
        "--point",
        "1/2,-3",
        "--i",
        "1",
    ]));
    assert_eq!(generic["dims"]["1"], 0);
}

#[test]
fn prop21_golden_case() {
    let dir = TempDir::new().unwrap();
    let case = write(&dir, "p21.json", PROP21_G1);
    let out = jumploci(&["verify", "prop21", s(&case)]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!(r["expected_matches"], true);
    assert_eq!(r["equivalent"], true);
}

#[test]
fn golden_mismatch_is_a_failure() {
    let dir = TempDir::new().unwrap();
    let wrong = PROP21_G1.replace(r#""side_i": false"#, r#""side_i": true"#);
    let case = write(&dir, "p21.json", &wrong);
    let out = jumploci(&["verify", "prop21", s(&case)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["expected_matches"], false);
}

#[test]
fn anisotropic_cone_and_annihilator() {
    let dir = TempDir::new().unwrap();
    let cup = write(&dir, "cup.json", ANISOTROPIC);
    let cone = stdout_json(&jumploci(&["cone", s(&cup)]));
    let gens = cone["ideal"]["gens"].as_array().unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0]["terms"].as_array().unwrap().len(), 2);
    let ann = stdout_json(&jumploci(&["annihilator", s(&cup), "--i", "0"]));
    assert_eq!(ann["subspace"]["basis"].as_array().unwrap().len(), 2);
}

#[test]
fn thm_linear_from_flags() {
    let out = jumploci(&[
        "verify",
        "thm-linear",
        "--g",
        "2",
        "--point",
        "0,0",
        "--i",
        "1",
        "--k",
        "2",
        "--depth",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!(r["equal_mod"], serde_json::json!([true, true, true, true]));
}

#[test]
fn prop_main_suite_seed_three() {
    let out = jumploci(&[
        "--seed",
        "3",
        "--count",
        "50",
        "verify",
        "prop-main",
        "--random",
    ]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!(r["count"], 50);
    assert_eq!(r["failed"], 0);
}

#[test]
fn suite_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        jumploci(&[
            "--seed",
            "11",
            "--count",
            "8",
            "-o",
            s(p),
            "suite",
            "prop21",
        ]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn boundary_counterexamples_exit_one() {
    let out = jumploci(&[
        "--seed", "7", "--count", "10", "verify", "boundary", "--random",
    ]);
    assert_eq!(code(&out), 1);
    let r = stdout_json(&out);
    let failing = r["failing_cases"].as_array().unwrap();
    assert!(!failing.is_empty());
    for case in &r["cases"].as_array().unwrap()[..] {
        if case["outcome"] == "fail" {
            assert!(case.get("input").is_some());
        }
    }
}

#[test]
fn bad_exponent_reports_json_path() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "c.json",
        r#"{"ring": ["x", "y", "z"], "lo": 0, "hi": 1, "ranks": [1, 1],
            "diff": {"0": [[{"terms": [{"c": "1", "e": [2]}]}]]}}"#,
    );
    let out = jumploci(&["jump-ideal", s(&bad), "--i", "0", "--k", "1"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("diff[0][0][0].terms[0].e"), "{err}");
}

#[test]
fn zero_denominator_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "i.json",
        r#"{"ring": ["x"], "gens": [{"terms": [{"c": "1/0", "e": [1]}]}]}"#,
    );
    assert_eq!(code(&jumploci(&["gb", s(&bad)])), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&jumploci(&["suite", "nope"])), 2);
    assert_eq!(code(&jumploci(&["no-such-command"])), 2);
    assert_eq!(code(&jumploci(&["gb", "/nonexistent/file.json"])), 2);
}

#[test]
fn size_limit_exits_three() {
    let dir = TempDir::new().unwrap();
    let k5 = dir.path().join("k5.json");
    jumploci(&["koszul", "--g", "5", "-o", s(&k5)]);
    assert_eq!(
        code(&jumploci(&["jump-ideal", s(&k5), "--i", "2", "--k", "1"])),
        3
    );
}

#[test]
fn gaussian_field_accepts_imaginary_coefficients() {
    let dir = TempDir::new().unwrap();
    let id = write(
        &dir,
        "i.json",
        r#"{"ring": ["x", "y"], "gens": ["x^2 + y^2", "x - I*y"]}"#,
    );
    let out = jumploci(&["--field", "qi", "gb", s(&id)]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&jumploci(&["gb", s(&id)])), 2);
}

#[test]
fn gb_output_is_a_fixed_point() {
    let dir = TempDir::new().unwrap();
    let id = write(
        &dir,
        "i.json",
        r#"{"ring": ["x", "y"], "gens": ["x^2 - y", "x*y"]}"#,
    );
    let first = jumploci(&["gb", s(&id)]);
    let again = write(
        &dir,
        "j.json",
        &String::from_utf8(first.stdout.clone()).unwrap(),
    );
    let second = jumploci(&["gb", s(&again)]);
    assert_eq!(first.stdout, second.stdout);
}
