//! Browser bindings for kron-core.
//!
//! Each exported function returns a JSON string. The `*_json` functions hold
//! the logic and run natively; the `#[wasm_bindgen]` wrappers only convert
//! errors into JavaScript exceptions.

use kron_core::closed_forms::{product_hook, product_two_row};
use kron_core::series::{g_k, l_kr, RationalGF};
use kron_core::{Partition, SchurVector};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps page interactions responsive; the closed forms themselves are cheap.
pub const MAX_D: usize = 40;
pub const MAX_ORDER: usize = 200;

fn partition_json(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

fn expansion(mu: Partition, nu: Partition, f: &SchurVector) -> String {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| json!({"lambda": partition_json(l), "coeff": c.to_string()}))
        .collect();
    json!({
        "mu": partition_json(&mu),
        "nu": partition_json(&nu),
        "terms": terms,
        "max_coeff": f.max_coeff().to_string(),
    })
    .to_string()
}

fn check_d(d: usize) -> Result<(), String> {
    if d > MAX_D {
        return Err(format!("d = {d} is above the demo limit {MAX_D}"));
    }
    Ok(())
}

/// `s_(d,d) ∗ s_(d+k,d-k)` as `{"mu","nu","terms":[{"lambda","coeff"}],"max_coeff"}`.
pub fn two_row_json(d: usize, k: usize) -> Result<String, String> {
    check_d(d)?;
    let f = product_two_row(d, k).map_err(|e| e.to_string())?;
    Ok(expansion(
        Partition::two_row(d, d),
        Partition::two_row(d + k, d - k),
        &f,
    ))
}

/// `s_(d,d) ∗ s_(2d-k,1^k)` in the same schema as [`two_row_json`].
pub fn hook_json(d: usize, k: usize) -> Result<String, String> {
    check_d(d)?;
    let f = product_hook(d, k).map_err(|e| e.to_string())?;
    Ok(expansion(
        Partition::two_row(d, d),
        Partition::hook(2 * d - k, k),
        &f,
    ))
}

/// `G_k` (`r = 0`) or `L_{k,r}` (`r >= 1`) with its series to `order`.
pub fn series_json(k: usize, r: usize, order: usize) -> Result<String, String> {
    if order > MAX_ORDER {
        return Err(format!("order {order} is above the demo limit {MAX_ORDER}"));
    }
    let gf: RationalGF = if r == 0 {
        g_k(k)
    } else {
        l_kr(k, r).map_err(|e| e.to_string())?
    };
    let series = gf.series(order).map_err(|e| e.to_string())?;
    let strings = |v: &[num_bigint::BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    Ok(json!({
        "k": k,
        "r": r,
        "numerator": strings(gf.numerator().coeffs()),
        "denominator": strings(gf.denominator().coeffs()),
        "rational": gf.to_string(),
        "series": strings(&series),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn two_row_product(d: usize, k: usize) -> Result<String, JsError> {
    two_row_json(d, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hook_product(d: usize, k: usize) -> Result<String, JsError> {
    hook_json(d, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generating_function(k: usize, r: usize, order: usize) -> Result<String, JsError> {
    series_json(k, r, order).map_err(|e| JsError::new(&e))
}
