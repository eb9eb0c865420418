use std::path::Path;
use std::process::{Command, Output};

fn permspectra(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permspectra"))
        .args(args)
        .current_dir(dir)
        .env_remove("PERMSPECTRA_MAX_N")
        .output()
        .expect("binary should start")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chars_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = permspectra(&["chars", "--n", "4", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("chars_n4.json")).unwrap()).unwrap();
    assert_eq!(json["orthogonality_ok"], true);
    assert_eq!(json["rows"].as_array().unwrap().len(), 5);
    let csv = std::fs::read_to_string(dir.path().join("chars_n4.csv")).unwrap();
    assert!(csv.starts_with("irrep,"));
}

#[test]
fn spectrum_and_hoffman() {
    let dir = tempfile::tempdir().unwrap();
    let out = permspectra(&["spectrum", "--n", "5", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("spectrum_n5_t1_sym.json").exists());
    assert!(dir.path().join("spectrum_n5_t1_sym.csv").exists());

    let out = permspectra(&["hoffman", "--n", "5", "--t", "2", "--solve"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"6\""), "{}", stdout(&out));
}

#[test]
fn family_round_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = permspectra(&["family", "build", "--kind", "d", "--n", "5", "--out", "d.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let verify = permspectra(&["family", "verify", "--input", "d.json"], dir.path());
    assert_eq!(verify.status.code(), Some(0));
    let check: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(check["size"], 14);
    assert_eq!(check["t_intersecting"], true);
    assert!(check["coset"].is_null());

    let not_2 = permspectra(&["family", "verify", "--input", "d.json", "--t", "2"], dir.path());
    assert_eq!(not_2.status.code(), Some(1));
}

#[test]
fn search_appends_to_log() {
    let dir = tempfile::tempdir().unwrap();
    for _ in 0..2 {
        let out = permspectra(&["search", "clique", "--n", "4"], dir.path());
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).contains("\"optimum\": 6"));
    }
    let log = std::fs::read_to_string(dir.path().join("search_results.jsonl")).unwrap();
    assert_eq!(log.lines().count(), 2);
}

#[test]
fn verify_all_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = permspectra(&["verify-all", "--only", "1"], dir.path());
    let b = permspectra(&["verify-all", "--only", "1"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"passed\":true"));
}

#[test]
fn usage_and_guardrail_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(permspectra(&["spectrum"], dir.path()).status.code(), Some(2));
    assert_eq!(permspectra(&["spectrum", "--n", "5", "--t", "2"], dir.path()).status.code(), Some(2));
    assert_eq!(permspectra(&["search", "clique", "--n", "9"], dir.path()).status.code(), Some(2));
}
