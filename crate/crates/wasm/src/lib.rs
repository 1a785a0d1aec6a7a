//! Browser bindings: factor `x^n - lambda`, report a code with its Gray
//! image, and apply the Gray map to one vector. Each export returns a JSON
//! string; failures come back as `{"error": "..."}`.

use constacyclic::fppoly::factor_xn_minus_lambda;
use constacyclic::gray::{gray_image_code, gray_min_weight, gray_vec};
use constacyclic::text::parse_poly;
use constacyclic::{PrimeField, RConstaCode, RElem, Result, Theta};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Budget for minimum-weight scans in the page (keeps the tab responsive).
pub const MIN_WEIGHT_BUDGET: u128 = 1_594_323; // 3^13

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn theta(field: PrimeField, s: &str) -> Result<Theta> {
    Theta::from_elem(RElem::parse(field, s)?)
}

pub fn factor_json(p: u64, n: usize, lambda: i64) -> Result<Value> {
    let field = PrimeField::new(p)?;
    let fac = factor_xn_minus_lambda(field, n, field.reduce(lambda))?;
    let factors: Vec<Value> = fac
        .factors()
        .iter()
        .map(|(g, e)| json!({ "factor": g.to_string(), "multiplicity": e }))
        .collect();
    Ok(json!({
        "target": fac.target().to_string(),
        "factors": factors,
        "divisors": fac.monic_divisors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    }))
}

pub fn code_json(
    p: u64,
    n: usize,
    theta_text: &str,
    g1: &str,
    g2: &str,
    min_weight: bool,
) -> Result<Value> {
    let field = PrimeField::new(p)?;
    let th = theta(field, theta_text)?;
    let c = RConstaCode::from_standard_pair(n, th, parse_poly(field, g1)?, parse_poly(field, g2)?)?;
    let d = c.dual();
    let mut out = json!({
        "theta": th.to_string(),
        "g1": c.g_one_minus_v().to_string(),
        "g2": c.g_v().to_string(),
        "generator": c.single_generator().to_string(),
        "size_log_p": c.size_log_p(),
        "dual": {
            "theta": d.theta().to_string(),
            "g1": d.g_one_minus_v().to_string(),
            "g2": d.g_v().to_string(),
            "size_log_p": d.size_log_p(),
        },
    });
    if th.mu() != 0 {
        let image = gray_image_code(&c)?;
        let mw = if min_weight && !c.is_zero_code() {
            Some(gray_min_weight(&c, MIN_WEIGHT_BUDGET)?)
        } else {
            None
        };
        out["gray"] = json!({
            "length": image.len(),
            "dimension": c.size_log_p(),
            "generator": image.image_generator.to_string(),
            "mode": image.mode,
            "min_weight": mw,
        });
    }
    Ok(out)
}

/// `vector` is a comma-separated list of ring elements such as `1+v, 2v, 0`.
pub fn gray_json(p: u64, theta_text: &str, vector: &str) -> Result<Value> {
    let field = PrimeField::new(p)?;
    let th = theta(field, theta_text)?;
    let w = vector
        .split(',')
        .map(|s| RElem::parse(field, s.trim()))
        .collect::<Result<Vec<_>>>()?;
    let image = gray_vec(th, &w)?;
    let signed: Vec<i64> = image.iter().map(|&c| field.signed(c)).collect();
    Ok(json!({ "input": w.iter().map(|e| e.to_string()).collect::<Vec<_>>(), "image": signed }))
}

#[wasm_bindgen]
pub fn factor(p: u32, n: u32, lambda: i32) -> String {
    respond(factor_json(p as u64, n as usize, lambda as i64))
}

#[wasm_bindgen]
pub fn code(p: u32, n: u32, theta: &str, g1: &str, g2: &str, min_weight: bool) -> String {
    respond(code_json(p as u64, n as usize, theta, g1, g2, min_weight))
}

#[wasm_bindgen]
pub fn gray(p: u32, theta: &str, vector: &str) -> String {
    respond(gray_json(p as u64, theta, vector))
}
