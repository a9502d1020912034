use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weyl-cartan"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_without_timing(path: &Path) -> Value {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn normalize_and_parse_errors() {
    let o = run(&["normalize", "p*q"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q*p - i*hbar");
    let o = run(&["normalize", "q*(p"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn bracket_command() {
    let o = run(&["bracket", "q", "p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "i*hbar");
    let o = run(&["bracket", "--anti", "q", "p"]);
    assert_eq!(stdout(&o).trim(), "2*q*p - i*hbar");
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = scratch("usage");
    let out = dir.to_str().unwrap();
    assert_eq!(run(&["verify", "--suite", "nope", "--out", out]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "--out", out]).status.code(), Some(2));
    assert_eq!(run(&["table", "--tol", "-1", "--out", out]).status.code(), Some(2));
    assert_eq!(run(&["table", "--s", "1/0", "--out", out]).status.code(), Some(2));
    assert_eq!(run(&["table", "--config", "/nonexistent/run.toml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn table_is_deterministic_and_matches_golden() {
    let a = scratch("table_a");
    let b = scratch("table_b");
    for d in [&a, &b] {
        let o = run(&["table", "--n-max", "4", "--out", d.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/cartan_table_n4.txt")).unwrap();
    assert_eq!(std::fs::read_to_string(a.join("table.txt")).unwrap(), golden);
    assert_eq!(json_without_timing(&a.join("table.json")), json_without_timing(&b.join("table.json")));
    let v = json_without_timing(&a.join("table.json"));
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn verify_writes_sorted_report() {
    let dir = scratch("verify");
    let cfg = dir.join("run.toml");
    std::fs::write(&cfg, "n_max = 3\nsuites = [\"su11\", \"cartan\"]\njobs = 2\n").unwrap();
    let o = run(&["verify", "--config", cfg.to_str().unwrap(), "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json_without_timing(&dir.join("verify.json"));
    let suites: Vec<_> = v["result"]["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap().to_string()).collect();
    assert_eq!(suites, ["cartan", "su11"]);
    let checks = v["result"]["suites"][0]["checks"].as_array().unwrap();
    let keys: Vec<(String, String)> = checks.iter().map(|c| (c["tag"].as_str().unwrap().into(), c["params"].as_str().unwrap().into())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let again = scratch("verify_again");
    run(&["verify", "--config", cfg.to_str().unwrap(), "--jobs", "1", "--out", again.to_str().unwrap()]);
    assert_eq!(json_without_timing(&again.join("verify.json")), v);
}

#[test]
fn orthogonality_prints_resolution_and_writes_grids() {
    let dir = scratch("orth");
    let o = run(&["orthogonality", "--n-max", "2", "--s", "-3", "--phi", "pi/3", "--hbar", "2", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("resolved constant K = 2"), "{text}");
    let csvs: Vec<_> = std::fs::read_dir(&dir).unwrap().filter_map(|e| e.ok()).filter(|e| e.path().extension().is_some_and(|x| x == "csv")).collect();
    assert_eq!(csvs.len(), 2);
}

#[test]
fn schrodinger_and_genfun() {
    let dir = scratch("schrodinger");
    let o = run(&["schrodinger", "--n-max", "2", "--v", "0,1", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let csv = std::fs::read_to_string(dir.join("schrodinger_n2_v1.csv")).unwrap();
    assert!(csv.starts_with("y,potential,psi,residual"));
    let o = run(&["genfun", "--n-max", "8", "--v", "0,1,2", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
