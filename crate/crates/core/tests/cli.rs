//! End-to-end checks of the `torsion-lab` binary: reports, exit codes,
//! and the documented error classes.

use serde_json::Value;
use std::process::{Command, Output};
use torsion_lab::corpus::builtin_models;
use torsion_lab::io::{basis_to_document, complex_to_document};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torsion-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

#[test]
fn sphere_odd_reports_volume_power() {
    let output = run(&["sphere", "--dim", "3", "--radius", "1", "--rank", "1"]);
    assert!(output.status.success());
    let report = report(&output);
    assert_eq!(report["schema"], "torsion-lab/1");
    assert_eq!(report["status"], "ok");
    assert_eq!(report["torsion"]["exact"], "2*pi^2");
    let float = report["torsion"]["float"].as_f64().unwrap();
    assert!((float - 19.739208802178716).abs() < 1e-12);
    // not verbose: no per-degree block
    assert!(report.get("per_degree").is_none());
}

#[test]
fn sphere_even_is_one() {
    let output = run(&["sphere", "--dim", "2", "--radius", "5", "--rank", "4"]);
    assert!(output.status.success());
    assert_eq!(report(&output)["torsion"]["exact"], "1");
}

#[test]
fn sphere_verbose_lists_degrees() {
    let output = run(&["sphere", "--dim", "3", "--verbose", "--model", "hemispheric"]);
    assert!(output.status.success());
    let report = report(&output);
    let degrees = report["per_degree"].as_array().unwrap();
    assert_eq!(degrees.len(), 4);
    assert_eq!(degrees[1]["det"]["exact"], "1");
}

#[test]
fn wengyou_matches_volume() {
    let output = run(&["wengyou", "--k", "1"]);
    assert!(output.status.success());
    assert_eq!(report(&output)["torsion"]["exact"], "2*pi^2");
}

#[test]
fn product_spot_value() {
    let output = run(&["product", "--dims", "2", "1", "--radii", "1", "1"]);
    assert!(output.status.success());
    assert_eq!(report(&output)["torsion"]["exact"], "4*pi^2");
}

#[test]
fn volume_with_quadrature() {
    let output = run(&["volume", "--dim", "3", "--quadrature", "1024"]);
    assert!(output.status.success());
    let report = report(&output);
    assert_eq!(report["volume"]["exact"], "2*pi^2");
    let diff = report["quadrature"]["relative_difference"].as_f64().unwrap();
    assert!(diff <= 1e-9, "{diff}");
}

#[test]
fn torsion_subcommand_exact_and_float() {
    let dir = tempfile::tempdir().unwrap();
    let model = &builtin_models()[0];
    let complex_path = dir.path().join("complex.json");
    let basis_path = dir.path().join("basis.json");
    std::fs::write(
        &complex_path,
        serde_json::to_string_pretty(&complex_to_document(&model.complex)).unwrap(),
    )
    .unwrap();
    std::fs::write(
        &basis_path,
        serde_json::to_string_pretty(&basis_to_document(&model.basis)).unwrap(),
    )
    .unwrap();

    let output = run(&[
        "torsion",
        "--complex",
        complex_path.to_str().unwrap(),
        "--basis",
        basis_path.to_str().unwrap(),
        "--verbose",
    ]);
    assert!(output.status.success());
    let exact = report(&output)["torsion"]["exact"].as_str().unwrap().to_string();
    assert_eq!(exact, torsion_lab::io::render_exact(&model.expected));

    let output = run(&[
        "torsion",
        "--complex",
        complex_path.to_str().unwrap(),
        "--basis",
        basis_path.to_str().unwrap(),
        "--float",
    ]);
    assert!(output.status.success());
    let report = report(&output);
    assert!(report["torsion"].get("exact").is_none());
    let float = report["torsion"]["float"].as_f64().unwrap();
    let expected = model.expected.to_f64().unwrap();
    assert!((float - expected).abs() / expected <= 1e-9);
}

#[test]
fn acyclic_document_needs_no_basis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("acyclic.json");
    std::fs::write(
        &path,
        r#"{"schema":"torsion-lab/1","degrees":[1,1],"boundaries":[[["2"]]]}"#,
    )
    .unwrap();
    let output = run(&["torsion", "--complex", path.to_str().unwrap()]);
    assert!(output.status.success());
    assert_eq!(report(&output)["torsion"]["exact"], "2");
}

#[test]
fn invalid_document_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"schema":"torsion-lab/1","degrees":[1,1,1],"boundaries":[[["1"]],[["1"]]]}"#,
    )
    .unwrap();
    let output = run(&["torsion", "--complex", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let report = report(&output);
    assert_eq!(report["status"], "error");
    assert!(report["error"].as_str().unwrap().contains("degree 1"));
}

#[test]
fn missing_file_exits_one() {
    let output = run(&["torsion", "--complex", "/nonexistent/complex.json"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unknown_flag_exits_one() {
    let output = run(&["sphere", "--dim", "3", "--bogus"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn nonpositive_radius_exits_one() {
    let output = run(&["sphere", "--dim", "3", "--radius", "-2"]);
    assert_eq!(output.status.code(), Some(1));
    let output = run(&["sphere", "--dim", "3", "--radius", "0"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn bad_tolerance_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("acyclic.json");
    std::fs::write(
        &path,
        r#"{"schema":"torsion-lab/1","degrees":[1,1],"boundaries":[[["1"]]]}"#,
    )
    .unwrap();
    let output = run(&["torsion", "--complex", path.to_str().unwrap(), "--float", "--tol", "0.5"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip_timing = |output: &Output| {
        let mut value = report(output);
        value.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string(&value).unwrap()
    };
    let a = run(&["sphere", "--dim", "4", "--radius", "7/3", "--rank", "2", "--verbose"]);
    let b = run(&["sphere", "--dim", "4", "--radius", "7/3", "--rank", "2", "--verbose"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip_timing(&a), strip_timing(&b));
}
