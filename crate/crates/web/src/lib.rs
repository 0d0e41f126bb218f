//! Browser bindings. Each export is a thin wrapper around a plain function
//! that returns a JSON string, so the logic is testable without a browser.

use bridgeburn::families::{build_gk, Role};
use bridgeburn::sim::{cop_cascade_policy, default_round_cap, robber_delay_policy, simulate};
use bridgeburn::{parse_graph, solve_with, Error, Method, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Larger inputs would stall a browser tab.
pub const MAX_DEMO_COPS: usize = 3;
pub const MAX_DEMO_GK_N: usize = 4;

pub fn solve_json(graph_json: &str, k: usize, method: &str) -> Result<String> {
    if k == 0 || k > MAX_DEMO_COPS {
        return Err(Error::Input(format!("cop count must be 1..={MAX_DEMO_COPS}")));
    }
    let method = match method {
        "retro" => Method::LayeredRetrograde,
        "vi" => Method::ValueIteration,
        other => return Err(Error::Input(format!("unknown method {other:?}"))),
    };
    let g = parse_graph(graph_json)?;
    let r = solve_with(&g, k, method)?;
    Ok(serde_json::to_string(&r).expect("serializable"))
}

fn role_kind(r: &Role) -> String {
    let s = format!("{r:?}");
    s.split('(').next().unwrap_or(&s).to_string()
}

pub fn gk_summary_json(k: usize, n: usize) -> Result<String> {
    if n > MAX_DEMO_GK_N {
        return Err(Error::Input(format!("n must be at most {MAX_DEMO_GK_N} here")));
    }
    let d = build_gk(k, n)?;
    let g = &d.graph;
    let mut roles = serde_json::Map::new();
    for v in 0..g.vertex_count() {
        let e = roles.entry(role_kind(d.role(v))).or_insert(json!(0));
        *e = json!(e.as_u64().unwrap() + 1);
    }
    let cycles: Vec<usize> = (0..d.level_count()).map(|l| d.cycle(l).len()).collect();
    let v = json!({
        "k": k,
        "n": n,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "doors": d.doors.len(),
        "cop_cycles": cycles,
        "roles": Value::Object(roles),
        "standard_position": d.standard_position(),
    });
    Ok(v.to_string())
}

pub fn simulate_json(k: usize, n: usize) -> Result<String> {
    if n > MAX_DEMO_GK_N {
        return Err(Error::Input(format!("n must be at most {MAX_DEMO_GK_N} here")));
    }
    let d = build_gk(k, n)?;
    let mut cops = cop_cascade_policy(&d);
    let mut robber = robber_delay_policy(&d);
    let t = simulate(&d, &mut cops, &mut robber, default_round_cap(k, n))?;
    Ok(serde_json::to_string(&t).expect("serializable"))
}

fn to_js(r: Result<String>) -> std::result::Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn solve_graph(graph_json: &str, k: usize, method: &str) -> std::result::Result<String, JsValue> {
    to_js(solve_json(graph_json, k, method))
}

#[wasm_bindgen]
pub fn gk_summary(k: usize, n: usize) -> std::result::Result<String, JsValue> {
    to_js(gk_summary_json(k, n))
}

#[wasm_bindgen]
pub fn simulate_gk(k: usize, n: usize) -> std::result::Result<String, JsValue> {
    to_js(simulate_json(k, n))
}
