//! Browser bindings. Every entry point takes and returns JSON text.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use krel::harness::{run_suite, suite_ids, GeneratorConfig};
use krel::json::{parse_instance, parse_scalars, Instance};

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn text(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json")
}

/// Classification of a relation or boundary-relation document.
#[wasm_bindgen]
pub fn classify(doc: &str) -> Result<String, JsError> {
    let v = match parse_instance(doc).map_err(js_err)? {
        Instance::Relation(r) => json!({ "kind": "relation", "classification": r.classify().map_err(js_err)? }),
        Instance::Gbr(g) => json!({ "kind": "gbr", "classification": g.classify_boundary() }),
        other => return Err(JsError::new(&format!("expected a relation or gbr document, got {}", other.kind()))),
    };
    Ok(text(v))
}

/// Weyl family at each point of a JSON list such as `["0+1*i", "1+2*i"]`.
#[wasm_bindgen]
pub fn weyl(doc: &str, points: &str) -> Result<String, JsError> {
    let Instance::Gbr(g) = parse_instance(doc).map_err(js_err)? else {
        return Err(JsError::new("expected a gbr document"));
    };
    let raw: Vec<String> = serde_json::from_str(points).map_err(js_err)?;
    let zs = parse_scalars(&raw).map_err(js_err)?;
    let samples: Vec<Value> = zs.iter().map(|z| serde_json::to_value(g.weyl_family(z)).expect("json")).collect();
    Ok(text(Value::Array(samples)))
}

/// Runs one registered suite; trials run sequentially in the browser.
#[wasm_bindgen]
pub fn suite(id: &str, seed: u64, trials: usize, max_dim: usize) -> Result<String, JsError> {
    let cfg = GeneratorConfig { seed, trials, max_dim, ..Default::default() };
    let report = run_suite(id, &cfg).map_err(js_err)?;
    Ok(report.to_json_line())
}

/// Registered suite ids as a JSON list.
#[wasm_bindgen]
pub fn suites() -> String {
    serde_json::to_string(&suite_ids()).expect("json")
}
