//! JSON outputs validate against the schemas shipped in `schemas/`.

mod common;

use common::{stdout, workspace};

fn validate(schema: &str, args: &[&str]) {
    let path = workspace().join("schemas").join(schema);
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let instance: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{args:?} against {}: {errors:#?}", path.display());
}

#[test]
fn roots() {
    for t in ["A1", "G2", "F4", "E6"] {
        validate("roots.schema.json", &["roots", "--type", t, "--format", "json"]);
    }
}

#[test]
fn weyl() {
    validate("weyl.schema.json", &["weyl", "--format", "json"]);
    validate("weyl.schema.json", &["weyl", "--type", "E6", "--format", "json"]);
}

#[test]
fn ideals() {
    validate("ideals.schema.json", &["ideals", "--type", "F4", "--format", "json"]);
}

#[test]
fn orbits() {
    validate("orbits.schema.json", &["orbits", "--format", "json"]);
    validate("orbits.schema.json", &["orbits", "--type", "E6", "--format", "json"]);
}

#[test]
fn fibers() {
    validate("fibers.schema.json", &["fibers", "--format", "json"]);
}

#[test]
fn classification() {
    validate("classification.schema.json", &["fibers", "--type", "F4", "--quintuples", "--format", "json"]);
    validate("classification.schema.json", &["quintuples", "--type", "E6", "--format", "json"]);
}

#[test]
fn quintuples() {
    validate("quintuples.schema.json", &["quintuples", "--ideal", "I_alpha", "--format", "json"]);
}

#[test]
fn betti() {
    validate("betti.schema.json", &["betti", "--format", "json"]);
    validate("betti.schema.json", &["betti", "--ideal", "I_beta", "--format", "json"]);
}

#[test]
fn dot_action() {
    validate("dot-action.schema.json", &["dot-action", "--format", "json"]);
}
