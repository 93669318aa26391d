//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export takes the matroid description text plus one argument and
//! returns a JSON string; errors come back as a JS string.

use matred::commands::{reducts_by_route, ReductMethod};
use matred::dependence::com_family;
use matred::format::{parse_matroid, parse_set_arg, render_matroid};
use matred::generate::{random_matroid, KINDS};
use matred::hyperplanes::FlatLattice;
use matred::{Matroid, SetFamily, SubsetMask, WeightVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest universe the page accepts; the lattice drawing gets unreadable
/// well before the library caps.
pub const DEMO_MAX: usize = 10;

fn load(text: &str) -> Result<Matroid, String> {
    let m = parse_matroid(text).map_err(|e| e.to_string())?;
    if m.universe_size() > DEMO_MAX {
        return Err(format!("the demo handles at most {DEMO_MAX} elements"));
    }
    Ok(m)
}

fn family_json(f: &SetFamily) -> Value {
    Value::from(f.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

/// Flats with ranks and cover edges, plus closure data for `set`.
pub fn explore_json(matroid: &str, set: &str) -> Result<Value, String> {
    let m = load(matroid)?;
    let x = parse_set_arg(set, m.universe_size()).map_err(|e| e.to_string())?;
    let lattice = FlatLattice::new(&m).map_err(|e| e.to_string())?;
    let flats: Vec<SubsetMask> = lattice.flats().iter().collect();
    let mut covers = Vec::new();
    for (i, lower) in flats.iter().enumerate() {
        for (j, upper) in flats.iter().enumerate() {
            if lower.is_proper_subset_of(*upper) && m.rank(*upper) == m.rank(*lower) + 1 {
                covers.push(json!([i, j]));
            }
        }
    }
    let closure = m.closure(x);
    Ok(json!({
        "n": m.universe_size(),
        "rank": m.full_rank(),
        "set": x.to_string(),
        "set_rank": m.rank(x),
        "independent": m.is_independent(x),
        "closure": closure.to_string(),
        "closure_via_hyperplanes": lattice.closure_via_hyperplanes(x).to_string(),
        "containing_hyperplanes": family_json(&lattice.hyperplanes_containing(x)),
        "flats": flats.iter().map(|f| json!({
            "set": f.to_string(),
            "rank": m.rank(*f),
            "hyperplane": lattice.hyperplanes().contains(*f),
            "is_closure": *f == closure,
        })).collect::<Vec<_>>(),
        "covers": covers,
        "bases": family_json(&m.bases()),
    }))
}

/// The reducts of `set` by each route, and whether they agree.
pub fn reducts_json(matroid: &str, set: &str) -> Result<Value, String> {
    let m = load(matroid)?;
    let x = parse_set_arg(set, m.universe_size()).map_err(|e| e.to_string())?;
    let lattice = FlatLattice::new(&m).map_err(|e| e.to_string())?;
    let mut routes = serde_json::Map::new();
    let mut first: Option<SetFamily> = None;
    let mut agree = true;
    for route in ReductMethod::ROUTES {
        let f = reducts_by_route(&m, x, route).map_err(|e| e.to_string())?;
        if let Some(prev) = &first {
            agree &= *prev == f;
        } else {
            first = Some(f.clone());
        }
        routes.insert(route.name().into(), family_json(&f));
    }
    Ok(json!({
        "set": x.to_string(),
        "closure": m.closure(x).to_string(),
        "differences": family_json(&com_family(lattice.hyperplanes(), x)),
        "routes": routes,
        "agree": agree,
    }))
}

/// Greedy base for comma-separated weights, with every base's weight.
pub fn greedy_json(matroid: &str, weights: &str) -> Result<Value, String> {
    let m = load(matroid)?;
    let parsed: Result<Vec<f64>, _> = weights.split(',').map(|w| w.trim().parse::<f64>()).collect();
    let w = WeightVector::new(parsed.map_err(|e| format!("bad weights: {e}"))?).map_err(|e| e.to_string())?;
    let g = m.greedy_max_weight_base(&w).map_err(|e| e.to_string())?;
    let bases: Vec<Value> = m
        .bases()
        .iter()
        .map(|b| json!({ "set": b.to_string(), "weight": w.total(b) }))
        .collect();
    let best = m.bases().iter().map(|b| w.total(b)).fold(f64::NEG_INFINITY, f64::max);
    Ok(json!({
        "base": g.base.to_string(),
        "weight": g.weight,
        "optimal": g.weight == best,
        "bases": bases,
    }))
}

/// Description text of a seeded random matroid of kind `KINDS[kind % 5]`.
pub fn random_text(seed: u64, kind: usize, n: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n.min(DEMO_MAX);
    render_matroid(&random_matroid(&mut rng, kind % KINDS.len(), n, n))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore(matroid: &str, set: &str) -> Result<String, JsValue> {
    to_js(explore_json(matroid, set))
}

#[wasm_bindgen]
pub fn reducts(matroid: &str, set: &str) -> Result<String, JsValue> {
    to_js(reducts_json(matroid, set))
}

#[wasm_bindgen]
pub fn greedy(matroid: &str, weights: &str) -> Result<String, JsValue> {
    to_js(greedy_json(matroid, weights))
}

#[wasm_bindgen]
pub fn random_matroid_text(seed: u32, kind: u32, n: u32) -> String {
    random_text(seed as u64, kind as usize, n as usize)
}
