//! wasm-bindgen surface for the static demo page in `web/`.
//!
//! Every export takes plain values and returns a JSON string. Planes are
//! referred to by their position in the enumeration of 𝔾^n_k, which is what
//! the page uses to render toggles.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use grassform::reconstruct::{reconstruct_form_via, Via};
use grassform::singsets::{check_condition_s, singular_set, CheckOutcome, CounterexampleKind};
use grassform::textio::parse_gram;
use grassform::{BilinearForm, Field, Grassmannian, Matrix, PlaneSet, Subspace};

/// Largest Grassmannian the page will lay out.
pub const MAX_PLANES: u128 = 2000;

fn rows(m: &Matrix) -> Value {
    json!(m.codes())
}

fn grassmannian(q: u32, n: usize, k: usize) -> Result<(Field, Vec<Subspace>), String> {
    let field = Field::with_order(q).map_err(|e| e.to_string())?;
    let g = Grassmannian::new(&field, n, k).map_err(|e| e.to_string())?;
    if g.count() > MAX_PLANES {
        return Err(format!("{} planes is too many to display (limit {MAX_PLANES})", g.count()));
    }
    Ok((field, g.iter().collect()))
}

fn plane_set(q: u32, n: usize, k: usize, indices: &[u32]) -> Result<PlaneSet, String> {
    let (field, planes) = grassmannian(q, n, k)?;
    let chosen = indices
        .iter()
        .map(|&i| {
            planes
                .get(i as usize)
                .cloned()
                .ok_or_else(|| format!("plane index {i} out of range"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PlaneSet::from_planes(&field, n, k, chosen).map_err(|e| e.to_string())
}

/// Every plane of 𝔾^n_k together with the indices of those on which the
/// form from `gram_text` is singular.
pub fn singular_set_value(gram_text: &str, k: usize) -> Result<Value, String> {
    let gram = parse_gram(gram_text).map_err(|e| e.to_string())?;
    let (q, n) = (gram.field().order() as u32, gram.rows());
    let form = BilinearForm::plain(gram).map_err(|e| e.to_string())?;
    let singular = singular_set(&form, k).map_err(|e| e.to_string())?;
    let (_, planes) = grassmannian(q, n, k)?;
    let selected: Vec<usize> = planes
        .iter()
        .enumerate()
        .filter(|(_, p)| singular.contains(p))
        .map(|(i, _)| i)
        .collect();
    Ok(json!({
        "q": q,
        "n": n,
        "k": k,
        "planes": planes.iter().map(|p| rows(p.basis())).collect::<Vec<_>>(),
        "singular": selected,
    }))
}

/// Runs the incidence check on the planes with the given indices.
pub fn check_value(q: u32, n: usize, k: usize, indices: &[u32]) -> Result<Value, String> {
    let x = plane_set(q, n, k, indices)?;
    Ok(match check_condition_s(&x).map_err(|e| e.to_string())? {
        CheckOutcome::Accepted(w) => json!({
            "accepted": true,
            "pairs": w.iter().map(|(s, fs)| json!([rows(s.basis()), rows(fs.basis())])).collect::<Vec<_>>(),
        }),
        CheckOutcome::Rejected(c) => json!({
            "accepted": false,
            "reason": match c.kind {
                CounterexampleKind::NoIncidentMembers => "no selected plane is incident with s",
                CounterexampleKind::NoCommonWitness => "the planes incident with s have no common witness",
                CounterexampleKind::MissingPlane => "a required plane is not selected",
                CounterexampleKind::UnexpectedPlane => "a selected plane misses the witness",
            },
            "s": rows(c.s.basis()),
            "plane": rows(c.plane.basis()),
        }),
    })
}

/// Recovers a symplectic Gram whose singular set is the selected planes.
pub fn reconstruct_value(q: u32, n: usize, k: usize, indices: &[u32], via: &str) -> Result<Value, String> {
    let x = plane_set(q, n, k, indices)?;
    let via = match via {
        "direct" => Via::Direct,
        "dual" => Via::Dual,
        "" if k + 2 == n => Via::Direct,
        "" => Via::Dual,
        other => return Err(format!("unknown pipeline `{other}`")),
    };
    let r = reconstruct_form_via(&x, via).map_err(|e| e.to_string())?;
    Ok(json!({
        "gram": rows(r.form.gram()),
        "via": via.to_string(),
        "sigma": r.map.sigma().to_string(),
        "flags": {
            "orthogonality": r.flags.orthogonality,
            "non_singular": r.flags.non_singular,
            "symplectic": r.flags.symplectic,
            "witness_matches": r.flags.witness_matches,
            "equal_sets": r.flags.equal_sets,
        },
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = singularSet)]
pub fn singular_set_js(gram_text: &str, k: usize) -> Result<String, JsError> {
    to_js(singular_set_value(gram_text, k))
}

#[wasm_bindgen(js_name = checkSet)]
pub fn check_js(q: u32, n: usize, k: usize, indices: Vec<u32>) -> Result<String, JsError> {
    to_js(check_value(q, n, k, &indices))
}

#[wasm_bindgen(js_name = reconstruct)]
pub fn reconstruct_js(q: u32, n: usize, k: usize, indices: Vec<u32>, via: &str) -> Result<String, JsError> {
    to_js(reconstruct_value(q, n, k, &indices, via))
}
