use std::process::{Command, Output};

use serde_json::Value;

fn giso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_giso")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = giso(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn num(v: &Value) -> f64 {
    v.as_str().expect("numbers are strings").parse().unwrap()
}

#[test]
fn case2_reports_rational_root() {
    let v = json(&["case2", "--n", "3", "--l", "-1", "--digits", "40"]);
    let root = &v["roots"][0];
    assert_eq!(root["exact"]["wa2"], "15/14");
    assert_eq!(root["exact"]["2Ea2"], "465/98");
    assert_eq!(root["exact"]["potential_coupling"], "660/49");
    assert!((num(&root["energy"]["Ea2"]) - 465.0 / 196.0).abs() < 1e-14);
}

#[test]
fn quasi_units_are_labelled() {
    let v = json(&["quasi", "--k", "0", "--l", "0", "--wa2", "1"]);
    let s = &v["solutions"][0];
    for key in ["Ea2", "2Ea2", "E_over_w", "E_reduced"] {
        assert!(s["energy"].get(key).is_some(), "missing {key}");
    }
    let ea2 = num(&s["energy"]["Ea2"]);
    assert!((num(&s["energy"]["2Ea2"]) - 2.0 * ea2).abs() < 1e-12);
}

#[test]
fn aim_matches_family_ground_state() {
    let v = json(&["aim", "--l", "-1", "--wa2", "1/2", "--g", "2", "--states", "1", "--digits", "40"]);
    assert!((num(&v["states"][0]["energy"]["2Ea2"]) + 1.5).abs() < 1e-12);
    assert_eq!(v["shortfall"], 0);
}

#[test]
fn oracle_agrees_with_family() {
    let v = json(&["oracle", "--l", "-1", "--wa2", "0.5", "--g", "2", "--count", "2"]);
    assert!((num(&v["states"][0]["energy"]["2Ea2"]) + 1.5).abs() < 1e-5);
    assert!((num(&v["states"][1]["energy"]["2Ea2"]) - 2.5).abs() < 1e-5);
}

#[test]
fn exact_family_listing() {
    let v = json(&["exact", "--max-index", "3"]);
    let m = v["members"].as_array().unwrap();
    assert_eq!(m.len(), 4);
    assert_eq!(m[2]["factor_z"]["polynomial"], "z^2 - 2");
    assert_eq!(m[2]["verified"], true);
}

#[test]
fn wavefunction_tsv_default() {
    let out = giso(&["wavefunction", "--samples", "3", "--range", "0:2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# preset=figure1"));
    assert_eq!(lines[1], "# x\tV\tpsi");
    assert_eq!(lines.len(), 5);
    let first: Vec<f64> = lines[2].split('\t').map(|c| c.parse().unwrap()).collect();
    assert_eq!(first[2], -49.0);
    assert!((first[1] + 660.0 / 49.0).abs() < 1e-12);
}

#[test]
fn normalized_wavefunction_has_unit_norm() {
    let v = json(&["wavefunction", "--preset", "family-0", "--samples", "401", "--range", "0:20", "--normalized", "--format", "json"]);
    let psi: Vec<f64> = v["psi"].as_array().unwrap().iter().map(num).collect();
    let h = 20.0 / 400.0;
    let trap: f64 = psi.iter().map(|p| p * p).sum::<f64>() * h - 0.5 * h * (psi[0] * psi[0] + psi[400] * psi[400]);
    assert!((trap - 1.0).abs() < 1e-6, "{trap}");
}

#[test]
fn csv_output() {
    let out = giso(&["exact", "--max-index", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("index,2Ea2,Ea2,factor_z\n0,-3/2,-3/4,1\n"), "{text}");
}

#[test]
fn json_output_is_deterministic() {
    let a = giso(&["case2", "--n", "4", "--l", "-1"]);
    let b = giso(&["case2", "--n", "4", "--l", "-1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("giso-out-{}.json", std::process::id()));
    let out = giso(&["exact", "--max-index", "0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "exact");
    std::fs::remove_file(path).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(giso(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(giso(&["quasi", "--k", "1", "--l", "x", "--wa2", "1"]).status.code(), Some(2));
    assert_eq!(giso(&["wavefunction", "--preset", "nope"]).status.code(), Some(2));
    assert_eq!(giso(&["reproduce", "table9"]).status.code(), Some(2));
    assert_eq!(giso(&["case2", "--n", "1", "--l", "0"]).status.code(), Some(2));
    let tiny = giso(&["oracle", "--l", "0", "--wa2", "1", "--g", "0", "--count", "3", "--cutoff", "2"]);
    assert_eq!(tiny.status.code(), Some(3), "{}", String::from_utf8_lossy(&tiny.stderr));
}

#[test]
fn reproduction_failure_exits_five() {
    let out = giso(&["reproduce", "table1"]);
    assert_eq!(out.status.code(), Some(5));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("FAIL 1.1"), "{err}");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn reproduction_success() {
    let out = giso(&["reproduce", "table3", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(2).all(|l| l.ends_with("\ttrue")));
}
