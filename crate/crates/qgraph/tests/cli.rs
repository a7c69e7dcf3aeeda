//! The binary end to end: catalog layout, exit codes, determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use qgraph::artifact::{ArtifactRecord, Kind};
use qgraph::catalog::CATALOG_ENV;

fn qgraph(catalog: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgraph")).env(CATALOG_ENV, catalog).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog_files(root: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = fs::read_dir(root)
        .unwrap()
        .map(|e| e.unwrap())
        .map(|e| (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap()))
        .collect();
    v.sort();
    v
}

#[test]
fn fusion_writes_one_hash_named_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgraph(dir.path(), &["fusion", "--algebra", "A3", "--level", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let hash = line.split_whitespace().nth(1).unwrap();
    let text = fs::read_to_string(dir.path().join(format!("{hash}.json"))).unwrap();
    let r = ArtifactRecord::parse(&text).unwrap();
    assert_eq!(r.kind, Kind::FusionRing);
    assert_eq!(r.payload["matrices"].as_array().unwrap().len(), 35);
    let index = fs::read_to_string(dir.path().join("index.tsv")).unwrap();
    assert_eq!(index.lines().count(), 1);
    assert!(index.starts_with(&format!("{hash}\tfusion-ring\t")));
}

#[test]
fn runs_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let o = qgraph(dir.path(), &["realize"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let files = catalog_files(a.path());
    assert_eq!(files.len(), 6, "five artifacts and the index");
    assert_eq!(files, catalog_files(b.path()));
    // Re-running into the same catalog adds nothing.
    qgraph(a.path(), &["realize"]);
    assert_eq!(files, catalog_files(a.path()));
}

#[test]
fn stages_chain_through_hashes() {
    let dir = tempfile::tempdir().unwrap();
    let hash_of = |o: &Output| stdout(o).lines().last().unwrap().split_whitespace().nth(1).unwrap().to_string();
    let inv = hash_of(&qgraph(dir.path(), &["invariant", "--fixture", "e4"]));
    let toric = qgraph(dir.path(), &["split", "--invariant", &inv[..10]]);
    assert_eq!(stdout(&toric).lines().count(), 1, "upstream was read, not recomputed");
    let oc = qgraph(dir.path(), &["ocneanu", "--toric", &hash_of(&toric)]);
    let real = qgraph(dir.path(), &["realize", "--oc-graph", &hash_of(&oc)]);
    assert_eq!(real.status.code(), Some(0));
    let dot = qgraph(dir.path(), &["export", "--kind", "oc-graph", "--format", "dot"]);
    assert_eq!(stdout(&dot).lines().filter(|l| l.contains("[label=")).count(), 48);
    let out = dir.path().join("e4.dot");
    let o = qgraph(dir.path(), &["export", "--kind", "graph-algebra", "--format", "dot", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(out).unwrap().starts_with("digraph \"E4\""));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| qgraph(dir.path(), args).status.code();
    assert_eq!(code(&["export", "--kind", "toric-family"]), Some(2));
    assert_eq!(code(&["split", "--invariant", "0123456789abcdef"]), Some(2));
    assert_eq!(code(&["fusion", "--level", "four"]), Some(64));
    assert_eq!(code(&["frobnicate"]), Some(64));
    assert_eq!(code(&["fusion", "--algebra", "B7", "--level", "1"]), Some(64));
    assert_eq!(code(&["export", "--kind", "fusion-ring", "--format", "svg"]), Some(64));
    assert_eq!(code(&["--help"]), Some(0));
    qgraph(dir.path(), &["fusion", "--level", "2"]);
    assert_eq!(code(&["export", "--kind", "fusion-ring", "--format", "dot"]), Some(64));
}

#[test]
fn tampered_artifact_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgraph(dir.path(), &["alcove", "--algebra", "B7", "--level", "1"]);
    let hash = stdout(&o).split_whitespace().nth(1).unwrap().to_string();
    let path = dir.path().join(format!("{hash}.json"));
    let text = fs::read_to_string(&path).unwrap().replace("[15,16]", "[15,17]");
    fs::write(&path, text).unwrap();
    assert_eq!(qgraph(dir.path(), &["export", "--kind", "alcove"]).status.code(), Some(1));
}

#[test]
fn verify_reports_every_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgraph(dir.path(), &["verify", "--fixture", "e4"]);
    let report = stdout(&o);
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), 12);
    for (i, l) in lines.iter().enumerate() {
        assert!(l.starts_with("PASS") || l.starts_with("FAIL"));
        assert_eq!(l[5..7].trim(), (i + 1).to_string());
    }
    let all_pass = lines.iter().all(|l| l.starts_with("PASS"));
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }));
}
