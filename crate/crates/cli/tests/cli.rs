//! End-to-end tests of the binary: exit codes, JSON/CSV schemas, the
//! stencil file round trip, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn semidisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semidisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = semidisc(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    for args in [&["--help"][..], &["stencil", "--help"], &["run", "--help"]] {
        let out = semidisc(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn out_of_range_radius_exits_2() {
    let out = semidisc(&["barrier", "--r", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = semidisc(&["barrier", "--r", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn barrier_emits_a_certificate() {
    let out = semidisc(&["barrier", "--r", "3"]);
    let json = stdout_json(&out);
    assert_eq!(json["conclusion"], "inconsistent_with_advection");
    assert_eq!(json["system_rank"], 7);
    assert_eq!(json["augmented_rank"], 8);
    assert_eq!(json["homogeneous_det"], json["closed_form_det"]);
    assert_eq!(json["config"]["seed"], 42);
}

#[test]
fn stencil_gen_produces_the_classical_coefficients() {
    let out = semidisc(&["stencil", "gen", "--r", "2"]);
    let json = stdout_json(&out);
    let c: Vec<&str> = json["c"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(c, ["1/12", "-2/3", "0", "2/3", "-1/12"]);
    assert_eq!(json["order"], 4);
}

#[test]
fn stencil_file_round_trip_through_moments() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("central4.json");
    let out = semidisc(&[
        "stencil",
        "gen",
        "--r",
        "2",
        "--quiet",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "--quiet must silence stdout");

    let out = semidisc(&[
        "stencil",
        "moments",
        "--file",
        path.to_str().unwrap(),
        "--kmax",
        "5",
    ]);
    let json = stdout_json(&out);
    let moments: Vec<&str> = json["moments"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(moments, ["0", "1", "0", "0", "0", "-4"]);
    assert_eq!(json["consistent"], true);
}

#[test]
fn fdb_check_passes_at_weight_3() {
    let out = semidisc(&["fdb", "check", "--s", "3", "--trials", "5"]);
    let json = stdout_json(&out);
    assert_eq!(json["recursion_ok"], true);
    assert_eq!(json["partitions"], 3);
    assert!(json["max_rel_error"].as_f64().unwrap() < 1e-6);
}

#[test]
fn lemmas_verify_reports_both_identities() {
    let out = semidisc(&[
        "lemmas", "verify", "--n-max", "5", "--trials", "30", "--seed", "7",
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["lemma1_ok"], true);
    assert_eq!(json["lemma2_ok"], true);
    assert_eq!(json["trials"], 30);
    assert_eq!(json["config"]["seed"], 7);
}

#[test]
fn stability_commands_work_on_a_written_stencil() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("upwind1.json");
    std::fs::write(&path, r#"{"r": 1, "c": ["0", "-1", "1"], "wave_speed": "1"}"#).unwrap();
    let path = path.to_str().unwrap();

    let out = semidisc(&[
        "stability", "symbol", "--stencil", path, "--lambda", "1.0", "--theta",
        "3.141592653589793",
    ]);
    let json = stdout_json(&out);
    assert!((json["re"].as_f64().unwrap() - (-1.0)).abs() < 1e-12);
    assert!(json["im"].as_f64().unwrap().abs() < 1e-12);

    let out = semidisc(&["stability", "cfl", "--stencil", path]);
    let json = stdout_json(&out);
    assert!((json["max_stable_cfl"].as_f64().unwrap() - 1.0).abs() < 1e-5);

    let out = semidisc(&["stability", "certify", "--r", "1"]);
    let json = stdout_json(&out);
    assert_eq!(json["unstable"], true);
    assert!(json["witness_theta"].as_f64().is_some());
}

#[test]
fn run_emits_a_norm_series_with_config_header() {
    let out = semidisc(&[
        "run", "--scheme", "upwind1", "--integrator", "fe", "--N", "64", "--cfl", "0.9",
        "--T", "0.5", "--problem", "advection",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let config = lines.next().unwrap();
    assert!(config.starts_with("# config: command=run scheme=upwind1"));
    assert!(config.contains("seed=42"));
    let outcome = lines.next().unwrap();
    assert!(outcome.starts_with("# outcome: completed"));
    assert_eq!(lines.next().unwrap(), "step,t,max_norm,two_norm");
    // Stable run: max norm never exceeds the initial value.
    let mut first_max = None;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        let max_norm: f64 = fields[2].parse().unwrap();
        let first = *first_max.get_or_insert(max_norm);
        assert!(max_norm <= first + 1e-10);
    }
}

#[test]
fn converge_emits_the_expected_table() {
    let out = semidisc(&[
        "converge", "--scheme", "upwind1", "--integrator", "fe", "--N", "40,80", "--T", "0.5",
        "--cfl", "0.5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# config: command=converge"));
    assert_eq!(lines[1], "N,h,error,observed_order");
    assert!(lines[2].starts_with("40,"));
    assert!(lines[2].ends_with(','), "first row has no observed order");
    let last: Vec<&str> = lines[3].split(',').collect();
    let order: f64 = last[3].parse().unwrap();
    assert!((order - 1.0).abs() < 0.3, "first-order scheme, got {order}");
}

#[test]
fn burgers_study_beyond_the_shock_time_is_a_usage_error() {
    let out = semidisc(&[
        "converge", "--scheme", "weno3", "--problem", "burgers", "--T", "1.5", "--N", "40,80",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn burgers_run_past_the_shock_is_allowed() {
    // No exact solution is consumed by `run`, so shock formation is fine.
    let out = semidisc(&[
        "run", "--scheme", "weno5", "--problem", "burgers", "--N", "64", "--T", "1.5",
        "--cfl", "0.4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains("completed"));
}

#[test]
fn order_measure_fits_the_design_order() {
    let out = semidisc(&["order", "measure", "--scheme", "upwind3", "--x", "0.7"]);
    let json = stdout_json(&out);
    let slope = json["fitted_order"].as_f64().unwrap();
    assert!((slope - 3.0).abs() < 0.15, "slope {slope}");
    assert_eq!(json["samples"].as_array().unwrap().len(), 4);

    let out = semidisc(&["order", "measure", "--scheme", "wavelet9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_scheme_is_a_usage_error() {
    let out = semidisc(&["run", "--scheme", "wavelet9", "--N", "64"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = semidisc(&["barrier", "--r", "2"]);
    let b = semidisc(&["barrier", "--r", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = semidisc(&["fdb", "check", "--s", "4", "--trials", "3", "--seed", "9"]);
    let b = semidisc(&["fdb", "check", "--s", "4", "--trials", "3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn paper_suite_passes_and_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = semidisc(&["paper-suite", "--out", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("9 of 9 criteria passed"), "table:\n{table}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let criteria = report["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 9);
    for c in criteria {
        assert_eq!(c["status"], "PASS", "{c}");
        assert!(c["id"].is_u64());
        assert!(c["value"].is_string());
        assert!(c["tolerance"].is_string());
    }
}

#[test]
fn custom_stencil_file_drives_a_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("biased.json");
    std::fs::write(
        &path,
        r#"{"r": 2, "c": ["0", "-1/3", "-1/2", "1", "-1/6"], "wave_speed": "1"}"#,
    )
    .unwrap();
    let out = semidisc(&[
        "run", "--scheme",
        path.to_str().unwrap(),
        "--integrator", "ssprk3", "--N", "48", "--cfl", "0.4", "--T", "0.2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains("completed"));
    assert!(!Path::new("biased.json").exists(), "no stray files in cwd");
}
