use std::process::Command;

use estrada_core::cli::{run, sidecar_path};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("estrada").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_estrada");
    let ok = Command::new(bin).args(["construct", "--family", "join", "--s", "1", "--p", "1", "--q", "1"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("Ch\n"));
    let usage = Command::new(bin).args(["verify"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let parse = Command::new(bin).args(["compute", "--graph6", "~~~~"]).output().unwrap();
    assert_eq!(parse.status.code(), Some(3));
}

#[test]
fn compute_complete_bipartite() {
    let (code, out, _) = call(&["compute", "--family", "complete-bipartite", "--p", "2", "--q", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rec = if v.is_array() { v[0].clone() } else { v };
    assert_eq!(rec["nullity"], 3);
    let ee = rec["estrada_eigen"].as_f64().unwrap();
    assert!((ee - (3.0 + 2.0 * 6f64.sqrt().cosh())).abs() < 1e-10);
    assert!((rec["estrada_cosh"].as_f64().unwrap() - ee).abs() < 1e-10);
}

#[test]
fn compute_accepts_non_bipartite_but_skips_cosh() {
    // triangle
    let (code, out, _) = call(&["compute", "--graph6", "Bw"]);
    assert_eq!(code, 0);
    assert!(out.contains("null"));
}

#[test]
fn input_sources_are_exclusive() {
    let (code, _, err) = call(&["compute", "--graph6", "Bw", "--family", "join", "--s", "1", "--p", "1", "--q", "1"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = call(&["compute"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["construct", "--family", "join", "--s", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn moments_of_path() {
    // P4: M_4 = 14
    let (code, out, _) = call(&["moments", "--family", "join", "--s", "1", "--p", "1", "--q", "1", "--k-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("14"), "{out}");
}

#[test]
fn compare_grids() {
    let (code, out, _) = call(&["compare", "--lemma", "4.2", "--max-p", "8", "--max-q", "4", "--max-s", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 1);
    assert!(!out.contains(",fails,"));
    let (code, out, _) = call(&["compare", "--lemma", "4.3", "--max-n", "9"]);
    assert_eq!(code, 1, "the inequality reverses at n = 2s + 2");
    assert!(out.contains("fails"));
    let (code, _, _) = call(&["compare", "--lemma", "5.0"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_matching_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["verify", "--theorem", "matching", "--n-max", "7", "--out", p]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("ok")).count(), 12);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["classes"].as_array().unwrap().len(), 12);
    assert_eq!(json["verified"], true);
    let csv = std::fs::read_to_string(path.with_extension("csv")).unwrap();
    assert_eq!(csv.lines().count(), 13);
    let timing = std::fs::read_to_string(sidecar_path(&path)).unwrap();
    assert!(timing.contains("total_seconds"));
    assert!(!std::fs::read_to_string(&path).unwrap().contains("seconds"));
}

#[test]
fn verify_rejects_bad_ranges() {
    assert_eq!(call(&["verify", "--theorem", "matching", "--n-min", "1"]).0, 2);
    assert_eq!(call(&["verify", "--theorem", "matching", "--n-min", "5", "--n-max", "4"]).0, 2);
    assert_eq!(call(&["verify", "--theorem", "matching", "--n-max", "10"]).0, 2);
    assert_eq!(call(&["verify", "--theorem", "matching", "--threads", "0"]).0, 2);
}

#[test]
fn verify_connectivity_prediction_rules() {
    let (code, _, err) = call(&["verify", "--theorem", "connectivity", "--n-min", "4", "--n-max", "6", "--format", "text"]);
    assert_eq!(code, 1);
    assert!(err.contains("C(4,1)") && err.contains("C(6,2)"));
    let (code, out, _) = call(&[
        "verify", "--theorem", "edge-connectivity", "--n-min", "4", "--n-max", "6", "--prediction", "ceil-first",
        "--format", "text",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn verify_ranking_modes_agree() {
    let a = call(&["verify", "--theorem", "connectivity", "--n-max", "6", "--format", "csv", "--prediction", "ceil-first"]);
    let b = call(&[
        "verify", "--theorem", "connectivity", "--n-max", "6", "--format", "csv", "--prediction", "ceil-first",
        "--ranking", "exact-moments",
    ]);
    assert_eq!((a.0, b.0), (0, 0));
    let graphs = |s: &str| -> Vec<String> {
        s.lines().skip(1).map(|l| l.split(',').take(12).collect::<Vec<_>>().join(",")).collect()
    };
    assert_eq!(graphs(&a.1), graphs(&b.1));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
