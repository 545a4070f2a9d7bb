//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every exported function returns a JSON string: the result on success, or
//! `{"error": "..."}` on bad input.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use zzosp::algebras::{expected_dim, AlgebraSpec, Family};
use zzosp::cli::{algebra_basis, closed_form_dim, document, Command, RunConfig};
use zzosp::{Degree, GradedMatrix};

/// Largest matrix size the page will build.
pub const MAX_SIZE: usize = 12;

#[derive(Serialize)]
struct Element {
    label: String,
    degree: Option<Degree>,
    /// `[row, column, value]`, 1-based.
    entries: Vec<(usize, usize, String)>,
}

fn element(label: impl Into<String>, m: &GradedMatrix) -> Element {
    Element {
        label: label.into(),
        degree: m.degree(),
        entries: m.entries().map(|(i, j, v)| (i + 1, j + 1, v.to_string())).collect(),
    }
}

fn spec_of(algebra: &str, m1: u32, m2: u32, n1: u32, n2: u32) -> Result<AlgebraSpec, String> {
    let family: Family = algebra.parse().map_err(|e: zzosp::algebras::AlgebraError| e.to_string())?;
    let spec = AlgebraSpec::new(family, m1 as usize, m2 as usize, n1 as usize, n2 as usize).map_err(|e| e.to_string())?;
    if spec.size() > MAX_SIZE {
        return Err(format!("{spec} has matrix size {}; the demo stops at {MAX_SIZE}", spec.size()));
    }
    Ok(spec)
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn summary_value(spec: &AlgebraSpec) -> Result<Value, String> {
    let basis = algebra_basis(spec).map_err(|e| e.to_string())?;
    let expected = closed_form_dim(spec).map_err(|e| e.to_string())?;
    let signature = spec.signature();
    let elements: Vec<Element> = basis.iter().map(|(l, m)| element(l, m)).collect();
    Ok(json!({
        "spec": spec,
        "name": spec.to_string(),
        "size": spec.size(),
        "signature": signature,
        "dimension": basis.len(),
        "expected": expected,
        "basis": elements,
    }))
}

/// Basis elements `a`, `b` (1-based), their graded bracket, and a check of
/// `(xy)ᵀ = (−1)^{a·b} yᵀxᵀ` on the pair.
pub fn bracket_value(spec: &AlgebraSpec, a: usize, b: usize) -> Result<Value, String> {
    let basis = algebra_basis(spec).map_err(|e| e.to_string())?;
    let pick = |k: usize| {
        k.checked_sub(1)
            .and_then(|k| basis.elements.get(k).map(|m| (basis.labels[k].clone(), m)))
            .ok_or_else(|| format!("basis index {k} out of range 1..{}", basis.len()))
    };
    let (lx, x) = pick(a)?;
    let (ly, y) = pick(b)?;
    let (dx, dy) = (x.degree().expect("basis is homogeneous"), y.degree().expect("basis is homogeneous"));
    let br = x.bracket(y).map_err(|e| e.to_string())?;
    let lhs = x.mul(y).map_err(|e| e.to_string())?.graded_transpose();
    let rhs = y.graded_transpose().mul(&x.graded_transpose()).map_err(|e| e.to_string())?;
    let rhs = rhs.scale(&zzosp::Scalar::from_int(dx.sign(dy)));
    Ok(json!({
        "x": element(lx.clone(), x),
        "y": element(ly.clone(), y),
        "sign_rule": dx.dot(dy),
        "plain": if dx.dot(dy) == 1 { "anticommutator" } else { "commutator" },
        "bracket": element(format!("⟦{lx},{ly}⟧"), &br),
        "transpose_rule_holds": lhs == rhs,
    }))
}

pub fn relations_value(spec: &AlgebraSpec) -> Result<Value, String> {
    let doc = document(&RunConfig::new(Command::CheckRelations, *spec)).map_err(|e| e.to_string())?;
    let checks: Vec<Value> =
        doc.checks.iter().map(|c| json!({ "check": c.check, "total": c.total, "failed": c.failed })).collect();
    Ok(json!({ "name": spec.to_string(), "checks": checks, "summary": doc.summary }))
}

/// Dimension, signature and basis of an algebra.
#[wasm_bindgen]
pub fn algebra_summary(algebra: &str, m1: u32, m2: u32, n1: u32, n2: u32) -> String {
    respond(spec_of(algebra, m1, m2, n1, n2).and_then(|s| summary_value(&s)))
}

/// Graded bracket of two basis elements.
#[wasm_bindgen]
pub fn bracket_of(algebra: &str, m1: u32, m2: u32, n1: u32, n2: u32, a: u32, b: u32) -> String {
    respond(spec_of(algebra, m1, m2, n1, n2).and_then(|s| bracket_value(&s, a as usize, b as usize)))
}

/// Parastatistics relation checks (ospB, or sl with m1 = 1, m2 = 0).
#[wasm_bindgen]
pub fn check_relations(algebra: &str, m1: u32, m2: u32, n1: u32, n2: u32) -> String {
    respond(spec_of(algebra, m1, m2, n1, n2).and_then(|s| relations_value(&s)))
}

/// Closed-form dimension of an osp algebra, for the page's parameter hints.
#[wasm_bindgen]
pub fn osp_dimension(type_b: bool, m1: u32, m2: u32, n1: u32, n2: u32) -> i64 {
    let family = if type_b { Family::OspB } else { Family::OspD };
    AlgebraSpec::new(family, m1 as usize, m2 as usize, n1 as usize, n2 as usize)
        .ok()
        .and_then(|s| expected_dim(&s).ok())
        .map_or(-1, |d| d as i64)
}
