//! Browser bindings. Every entry point takes a problem file as text and returns
//! a JSON string; failures come back as `{"error": …}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use satlim::decide::decide_saturable;
use satlim::hilbert::hilbert_function;
use satlim::ideal::Ideal;
use satlim::limits::{limit_ideal_family, limit_ideal_points, ParamFamily};
use satlim::problem::{Payload, Problem};

fn ideal(text: &str) -> Result<Ideal, String> {
    let p = Problem::parse(text).map_err(|e| e.to_string())?;
    match p.payload {
        Payload::Ideal(g) => Ideal::new(&p.ring, g).map_err(|e| e.to_string()),
        _ => Err("expected an `ideal:` entry".into()),
    }
}

fn render(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn hilbert_text(i: &Ideal) -> String {
    if i.ring().grading_rank() == 1 {
        hilbert_function(i, 12).to_string()
    } else {
        "multigraded".into()
    }
}

pub fn saturate_json(text: &str) -> Result<Value, String> {
    let i = ideal(text)?;
    let sat = i.saturate();
    Ok(json!({
        "saturated": i.contains_ideal(sat),
        "saturation": sat.to_string(),
        "hilbert": hilbert_text(&i),
        "hilbert_saturation": hilbert_text(sat),
    }))
}

pub fn decide_json(text: &str) -> Result<Value, String> {
    let d = decide_saturable(&ideal(text)?).map_err(|e| e.to_string())?;
    serde_json::to_value(&d).map_err(|e| e.to_string())
}

pub fn limit_json(text: &str) -> Result<Value, String> {
    let p = Problem::parse(text).map_err(|e| e.to_string())?;
    let li = match &p.payload {
        Payload::Points { bound, points } => limit_ideal_points(&p.ring, points, *bound).map_err(|e| e.to_string())?,
        Payload::Family { bound, elements, .. } => {
            let fam = ParamFamily::new(&p.ring, elements.clone()).map_err(|e| e.to_string())?;
            limit_ideal_family(&fam, *bound)
        }
        _ => return Err("expected `points(e):` or `family(e):`".into()),
    };
    Ok(json!({
        "limit": li.ideal.to_string(),
        "saturation": li.ideal.saturate().to_string(),
        "hilbert": hilbert_text(&li.ideal),
        "complete": li.complete,
    }))
}

/// Saturation and Hilbert functions of an `ideal:` problem.
#[wasm_bindgen]
pub fn saturate(text: &str) -> String {
    render(saturate_json(text))
}

/// Saturability verdict for an `ideal:` problem.
#[wasm_bindgen]
pub fn decide(text: &str) -> String {
    render(decide_json(text))
}

/// Flat limit of a `points(e):` or `family(e):` problem.
#[wasm_bindgen]
pub fn limit(text: &str) -> String {
    render(limit_json(text))
}
