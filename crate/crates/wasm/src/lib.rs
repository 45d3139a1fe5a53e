//! Browser bindings: each export takes plain strings and returns a JSON document.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use singcay::blocks::block_of;
use singcay::cayley::{build_connecting, verdict};
use singcay::characters::GroupTable;
use singcay::{ClassLabel, Config, GroupKind, Partition};

/// Tables in the page stay small enough to render.
pub const MAX_DEMO_N: u32 = 10;

fn demo_config() -> Config {
    Config {
        max_table_n: MAX_DEMO_N,
        ..Config::default()
    }
}

pub fn table_json(group: &str, n: u32) -> Result<Value, String> {
    let group: GroupKind = group.parse().map_err(|e: singcay::Error| e.to_string())?;
    let table = GroupTable::cached(group, n, &demo_config()).map_err(|e| e.to_string())?;
    Ok(json!({
        "group": group,
        "n": n,
        "characters": table.characters,
        "classes": table.classes,
        "class_sizes": table.class_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "values": table
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    }))
}

pub fn diagram_json(lambda: &str, p: u32) -> Result<Value, String> {
    let lambda: Partition = lambda.parse().map_err(|e: singcay::Error| e.to_string())?;
    let block = block_of(&lambda, p).map_err(|e| e.to_string())?;
    Ok(json!({
        "partition": lambda,
        "n": lambda.size(),
        "transpose": lambda.transpose(),
        "symmetric": lambda.is_symmetric(),
        "hooks": lambda.hook_grid(),
        "degree": singcay::characters::degree(&lambda).to_string(),
        "block": block,
    }))
}

pub fn cayley_json(group: &str, n: u32, classes: &str) -> Result<Value, String> {
    let group: GroupKind = group.parse().map_err(|e: singcay::Error| e.to_string())?;
    let seeds = classes
        .split_whitespace()
        .map(|c| ClassLabel::parse_in(c, group))
        .collect::<singcay::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let cfg = demo_config();
    let spec = build_connecting(group, n, &seeds).map_err(|e| e.to_string())?;
    let mut v = verdict(&spec, &cfg).map_err(|e| e.to_string())?.to_json();
    v["total_size"] = Value::String(spec.total_size.to_string());
    v["spectrum_text"] = Value::Array(
        singcay::cayley::spectrum(&spec, &cfg)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|e| json!([e.eigenvalue.to_string(), e.multiplicity.to_string()]))
            .collect(),
    );
    Ok(v)
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn character_table(group: &str, n: u32) -> Result<String, JsError> {
    export(table_json(group, n))
}

#[wasm_bindgen]
pub fn diagram(lambda: &str, p: u32) -> Result<String, JsError> {
    export(diagram_json(lambda, p))
}

#[wasm_bindgen]
pub fn cayley(group: &str, n: u32, classes: &str) -> Result<String, JsError> {
    export(cayley_json(group, n, classes))
}
