//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes and returns plain strings (JSON for structured
//! results) so the page needs no generated TypeScript types.

use serde_json::json;
use wasm_bindgen::prelude::*;

use spin_cover::cover::{covering_map, quaternion_to_su2, rational_unit_quaternion};
use spin_cover::finite::{abstract_group, double_group_verdict, gpt_hat, gpt_spacetime, FiniteGroup, GroupKind};
use spin_cover::pt::{act_g0, q_projection, G0Element, SpinorSampleField};
use spin_cover::scalar::Rational;
use spin_cover::SCHEMA_VERSION;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Lifts the rational point `(x, y, z)` to a unit quaternion, then reports
/// the SU(2) matrix and its rotation.
pub fn rotation_from_point(x: &str, y: &str, z: &str) -> Result<String, String> {
    let parse = |s: &str| s.trim().parse::<Rational>().map_err(|e| e.to_string());
    let q = rational_unit_quaternion(&parse(x)?, &parse(y)?, &parse(z)?);
    let a = quaternion_to_su2(&q);
    let r = covering_map(&a).map_err(|e| e.to_string())?;
    let minus = covering_map(&a.neg()).map_err(|e| e.to_string())?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "quaternion": q,
        "su2": a.to_string(),
        "rotation": r.matrix().to_string(),
        "same_rotation_for_minus_a": r == minus,
    })
    .to_string())
}

fn group_by_name(name: &str) -> Result<FiniteGroup, String> {
    match name.trim() {
        "GPT_hat" => gpt_hat(),
        "GPT_spacetime" => gpt_spacetime(),
        other => other.parse::<GroupKind>().and_then(|k| abstract_group(&k)),
    }
    .map_err(|e| e.to_string())
}

/// Cayley table as `{elements, table, products}` where `products` holds
/// labels instead of indices.
pub fn table_for(name: &str) -> Result<String, String> {
    let g = group_by_name(name)?;
    if g.order() > 64 {
        return Err(format!("order {} is too large to display", g.order()));
    }
    let all: Vec<usize> = (0..g.order()).collect();
    let t = g.cayley_table();
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "elements": t.elements,
        "table": t.table,
        "products": g.product_grid(&all, &all),
        "abelian": g.is_abelian(),
        "element_orders": (0..g.order()).map(|i| g.element_order(i)).collect::<Vec<_>>(),
    })
    .to_string())
}

pub fn verdict_for(n: u32) -> Result<String, String> {
    let report = double_group_verdict(n as usize).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Applies `P`, `T`, `PT`, `I` or an explicit element to a field given in
/// the `t; x1,x2,x3; u; v` line format.
pub fn transform_field(transform: &str, field: &str) -> Result<String, String> {
    let g: G0Element = match transform.trim() {
        "I" => G0Element::identity(),
        "P" => G0Element::parity(),
        "T" => G0Element::time_reversal(),
        "PT" => G0Element::parity_time(),
        other => other.parse().map_err(|e: spin_cover::Error| e.to_string())?,
    };
    let f: SpinorSampleField = field.parse().map_err(|e: spin_cover::Error| e.to_string())?;
    let out = act_g0(&g, &f).map_err(|e| e.to_string())?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "element": g,
        "q_projection": q_projection(&g),
        "field": out.to_string(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = rotationFromPoint)]
pub fn rotation_from_point_js(x: &str, y: &str, z: &str) -> Result<String, JsValue> {
    rotation_from_point(x, y, z).map_err(err)
}

#[wasm_bindgen(js_name = cayleyTable)]
pub fn cayley_table_js(name: &str) -> Result<String, JsValue> {
    table_for(name).map_err(err)
}

#[wasm_bindgen(js_name = doubleGroupVerdict)]
pub fn double_group_verdict_js(n: u32) -> Result<String, JsValue> {
    verdict_for(n).map_err(err)
}

#[wasm_bindgen(js_name = applyTransform)]
pub fn apply_transform_js(transform: &str, field: &str) -> Result<String, JsValue> {
    transform_field(transform, field).map_err(err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn rotation_for_point() {
        let v = parse(rotation_from_point("0", "0", "0").unwrap());
        assert_eq!(v["same_rotation_for_minus_a"], true);
        assert_eq!(v["rotation"].as_str().unwrap().split(';').count(), 3);
        assert!(rotation_from_point("x", "0", "0").is_err());
    }

    #[test]
    fn named_table() {
        let v = parse(table_for("GPT_hat").unwrap());
        assert_eq!(v["products"][1][1], "-I");
        assert_eq!(v["abelian"], true);
        assert!(table_for("Z100").is_err());
        assert!(table_for("nope").is_err());
    }

    #[test]
    fn verdicts() {
        let v = parse(verdict_for(3).unwrap());
        assert_eq!(v["results"][0]["isomorphic"], true);
        assert_eq!(v["results"][1]["isomorphic"], false);
        assert!(verdict_for(1).is_err());
    }

    #[test]
    fn field_transform() {
        let v = parse(transform_field("T", "0; 0,0,0; 1; i\n").unwrap());
        assert_eq!(v["field"], "0; 0,0,0; i; 1\n");
        assert!(transform_field("P", "garbage").is_err());
    }
}
