//! Every produced artifact validates against the shipped JSON schemas.

mod common;

use std::fs;
use std::path::PathBuf;

use jsonschema::{Registry, Validator};
use qgraph::artifact::Kind;
use serde_json::Value;

const BASE: &str = "https://qgraph.invalid/schemas/";

fn schema(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "schemas", &format!("{name}.schema.json")].iter().collect();
    serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap()
}

fn envelope_validator() -> Validator {
    let mut registry = Registry::new();
    for k in Kind::ALL {
        registry = registry.add(format!("{BASE}{k}.schema.json"), schema(k.as_str())).unwrap();
    }
    let registry = registry.prepare().unwrap();
    jsonschema::options().with_registry(&registry).build(&schema("artifact-record")).unwrap()
}

#[test]
fn artifacts_match_their_schemas() {
    let v = envelope_validator();
    for o in common::chain().all() {
        let doc: Value = serde_json::from_str(&o.record.to_canonical()).unwrap();
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", o.record.kind);
    }
}

#[test]
fn schemas_reject_malformed_payloads() {
    let v = envelope_validator();
    let mut doc: Value = serde_json::from_str(&common::chain().fusion.record.to_canonical()).unwrap();
    doc["payload"]["matrices"][0][0][0] = Value::from(0.5);
    assert!(!v.is_valid(&doc));
    let mut doc: Value = serde_json::from_str(&common::chain().toric.record.to_canonical()).unwrap();
    doc["payload"]["multiplicities"][0] = Value::from(0);
    assert!(!v.is_valid(&doc));
}

#[test]
fn group_catalog_schema() {
    let v = jsonschema::validator_for(&schema("group-catalog")).unwrap();
    let ok: Value = serde_json::json!([{"name": "Spin(15)", "dim": 105, "dual_coxeter": 13}]);
    assert!(v.is_valid(&ok));
    assert!(!v.is_valid(&serde_json::json!([{"name": "G2"}])));
    let records: Vec<qgraph::payload::GroupRecord> = serde_json::from_value(ok).unwrap();
    let scan = qgraph::stages::embed_scan("SU(4)", 0, 100, Some(&records)).unwrap();
    assert_eq!(scan.record.payload["solutions"][0]["level"], 4);
}
