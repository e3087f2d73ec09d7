use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use metamob::simgen::{gen_dataset, Scenario, ScenarioConfig};
use metamob_cli::fit::FitReport;
use metamob_cli::report::{read_results, read_rows_csv};
use serde_json::Value;

fn metamob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metamob")).args(args).env("RUST_LOG", "warn").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "failed: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_json(o: &Output) -> Value {
    assert!(!o.status.success());
    let text = String::from_utf8_lossy(&o.stderr);
    let line = text.lines().rev().find(|l| l.starts_with('{')).unwrap_or_else(|| panic!("no JSON error in {text}"));
    serde_json::from_str(line).unwrap()
}

fn configs() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/configs"))
}

fn write_sim_a(dir: &Path, seed: u64) -> String {
    let config = ScenarioConfig::new(Scenario::SimA, 5, 1000, 0.0, 0.0).with_seed(seed);
    let (data, _) = gen_dataset(&config).unwrap();
    let path = dir.join("sim_a.csv");
    data.write_csv(fs::File::create(&path).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fit_recovers_sim_a_effects() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_sim_a(dir.path(), 11);
    let out = stdout(&metamob(&["fit", &data, "--method", "metamob-si"]));
    let report: FitReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.method, "metamob-si");
    let thetas: Vec<f64> = report.terminals.iter().map(|t| t.theta).collect();
    assert_eq!(thetas.len(), 4, "{thetas:?}");
    for (got, want) in thetas.iter().zip([-5.0, 0.0, 0.0, 5.0]) {
        assert!((got - want).abs() < 2.0, "{thetas:?}");
    }
    assert!(report.terminals.iter().all(|t| t.gamma_by_trial.as_ref().is_some_and(|g| g.len() == 5)));
}

#[test]
fn fit_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_sim_a(dir.path(), 12);
    for method in ["mob", "metamob-ri"] {
        let a = stdout(&metamob(&["fit", &data, "--method", method]));
        let b = stdout(&metamob(&["fit", &data, "--method", method]));
        assert_eq!(a, b);
    }
}

#[test]
fn constant_outcome_gives_one_terminal_without_effect() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.csv");
    let mut text = String::from("y,trt,trial,age\n");
    for i in 0..120 {
        text.push_str(&format!("3.5,{},{},{}\n", i % 2, i % 3 + 1, i));
    }
    fs::write(&path, text).unwrap();
    let out = stdout(&metamob(&["fit", path.to_str().unwrap(), "--method", "mob", "--format", "csv"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2, "{out}");
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[0], "1");
    assert_eq!(fields[1], "120");
    assert_eq!(fields[3].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn malformed_csv_reports_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "y,trt,trial,x\n1,0,1,2\n2,1,1,oops\n").unwrap();
    let err = error_json(&metamob(&["fit", path.to_str().unwrap()]));
    assert_eq!(err["error"]["kind"], "invalid_data");
    let msg = err["error"]["message"].as_str().unwrap();
    assert!(msg.contains("line 3") && msg.contains("`x`"), "{msg}");
}

#[test]
fn unknown_method_and_flags_are_rejected() {
    assert!(!metamob(&["fit", "data.csv", "--method", "lmtree"]).status.success());
    assert!(!metamob(&["fit", "data.csv", "--bogus"]).status.success());
    assert!(!metamob(&["frobnicate"]).status.success());
}

#[test]
fn simulate_output_does_not_depend_on_workers() {
    let config = configs().join("smoke.toml");
    let cfg = config.to_str().unwrap();
    let one = stdout(&metamob(&["simulate", cfg, "--reps", "2", "--workers", "1"]));
    let eight = stdout(&metamob(&["simulate", cfg, "--reps", "2", "--workers", "8"]));
    assert_eq!(one, eight);
    let rows = read_rows_csv(&one).unwrap();
    // 3 scenarios x 2 correlation targets x 4 methods.
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| r.reps == 2));
}

#[test]
fn simulate_json_round_trips_through_report_reader() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("smoke.toml");
    let csv_path = dir.path().join("r.csv");
    let json_path = dir.path().join("r.json");
    for (path, fmt) in [(&csv_path, "csv"), (&json_path, "json")] {
        let o = metamob(&["simulate", cfg.to_str().unwrap(), "--reps", "2", "--method", "mob,metamob-si", "--format", fmt, "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let a = read_results(&csv_path).unwrap();
    let b = read_results(&json_path).unwrap();
    assert_eq!(a.len(), 12);
    assert_eq!(a, b);
}

#[test]
fn grid_values_outside_the_design_need_allow_custom() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.toml");
    fs::write(&path, "scenario = \"null\"\nn_trials = 4\nn_total = 160\ntau0 = 0\ntau1 = 0\nmethods = \"mob\"\nreps = 1\n").unwrap();
    let p = path.to_str().unwrap();
    let err = error_json(&metamob(&["simulate", p]));
    assert!(err["error"]["message"].as_str().unwrap().contains("n_trials"));
    let out = stdout(&metamob(&["simulate", p, "--allow-custom"]));
    assert_eq!(read_rows_csv(&out).unwrap().len(), 1);
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("typo.toml");
    fs::write(&path, "scenario = \"null\"\nn_trials = 5\nn_total = 200\ntau0 = 0\ntau1 = 0\ntau2 = 1\n").unwrap();
    let err = error_json(&metamob(&["simulate", path.to_str().unwrap()]));
    assert_eq!(err["error"]["kind"], "error");
    assert!(err["error"]["message"].as_str().unwrap().contains("tau2"));
}

#[test]
fn report_with_no_inputs_writes_empty_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = metamob(&["report", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("no input files"));
    let table = fs::read_to_string(dir.path().join("table_fdr.csv")).unwrap();
    assert_eq!(table.lines().count(), 1);
    let series: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("series_fdr.json")).unwrap()).unwrap();
    assert_eq!(series["points"].as_array().unwrap().len(), 0);
}

#[test]
fn report_pivots_into_panels() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("g.toml");
    fs::write(
        &cfg,
        "scenario = \"null\"\nn_trials = [5, 10]\nn_total = 200\ntau0 = [0, 5]\ntau1 = 0\nmethods = [\"mob\", \"mob-ri\"]\nreps = 2\n",
    )
    .unwrap();
    let res = dir.path().join("res.csv");
    stdout(&metamob(&["simulate", cfg.to_str().unwrap(), "--out", res.to_str().unwrap()]));
    let table = stdout(&metamob(&["report", res.to_str().unwrap(), "--metric", "fdr"]));
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "scenario,corr_target,tau1,tau_gamma,tau0,method,N200_K5,N200_K10");
    // tau0 in {0, 5} x 2 methods, each line filled in both panels.
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.split(',').all(|f| !f.is_empty())));
    let series: Value = serde_json::from_str(&stdout(&metamob(&["report", res.to_str().unwrap(), "--format", "json"]))).unwrap();
    assert_eq!(series["points"].as_array().unwrap().len(), 8);
}

#[test]
fn report_rejects_foreign_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("other.csv");
    fs::write(&path, "a,b\n1,2\n").unwrap();
    let err = error_json(&metamob(&["report", path.to_str().unwrap()]));
    assert!(err["error"]["message"].as_str().unwrap().contains("schema mismatch"));
}
