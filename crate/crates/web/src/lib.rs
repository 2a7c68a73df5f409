//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function returns a JSON string; the `*_json` functions hold
//! the logic and run natively so they can be tested without a browser.

use lyndon_parity::bijection::{f_s_inv_traced, f_s_traced, omega, psi, BijectionTrace};
use lyndon_parity::lyndon::lyndon_factors;
use lyndon_parity::necklace::Subset;
use lyndon_parity::perms::Permutation;
use lyndon_parity::words::Word;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn factors_text(w: &Word) -> String {
    let factors = lyndon_factors(w);
    if factors.is_empty() {
        return "-".into();
    }
    factors.iter().map(Word::to_string).collect::<Vec<_>>().join("|")
}

fn rows(trace: &BijectionTrace) -> Value {
    let rows: Vec<Value> = trace
        .rows()
        .into_iter()
        .map(|r| json!({ "rule": r.rule.map(|x| x.table_label()).unwrap_or_default(), "O": r.o, "E": r.e }))
        .collect();
    Value::Array(rows)
}

/// `{"input", "output", "rows": [{"rule", "O", "E"}], "table"}` for `Ψ`
/// (`inverse = false`) or `Ω`.
pub fn word_trace_json(word: &str, inverse: bool) -> Result<String, String> {
    let w: Word = word.trim().parse().map_err(|e: lyndon_parity::Error| e.to_string())?;
    let (out, trace) = if inverse { omega(&w) } else { psi(&w) }.map_err(|e| e.to_string())?;
    Ok(json!({
        "input": factors_text(&w),
        "output": factors_text(&out),
        "rows": rows(&trace),
        "table": trace.table(),
    })
    .to_string())
}

/// The permutation bijection (or its inverse) with every intermediate object.
pub fn permutation_trace_json(set: &str, perm: &str, inverse: bool) -> Result<String, String> {
    let pi: Permutation = perm.trim().parse().map_err(|e: lyndon_parity::Error| e.to_string())?;
    let set = Subset::parse(pi.len(), set.trim()).map_err(|e| e.to_string())?;
    let comp = if inverse {
        f_s_inv_traced(&set, &pi)
    } else {
        f_s_traced(&set, &pi)
    }
    .map_err(|e| e.to_string())?;
    let image = comp.image.to_permutation().map_err(|e| e.to_string())?;
    Ok(json!({
        "set": set.to_string(),
        "necklaces_in": comp.necklaces_in.to_string(),
        "word_in": factors_text(&comp.word_in),
        "rows": rows(&comp.trace),
        "word_out": factors_text(&comp.word_out),
        "necklaces_out": comp.necklaces_out.to_string(),
        "cycle_form": comp.image.to_string(),
        "one_line": image.to_string(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn psi_trace(word: &str) -> Result<String, JsValue> {
    word_trace_json(word, false).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn omega_trace(word: &str) -> Result<String, JsValue> {
    word_trace_json(word, true).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fs_trace(set: &str, perm: &str, inverse: bool) -> Result<String, JsValue> {
    permutation_trace_json(set, perm, inverse).map_err(|e| JsValue::from_str(&e))
}
