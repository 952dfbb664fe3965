//! Versioned JSON documents.
//!
//! Every document has the shape
//! `{"data": ..., "kind": "...", "schema": 1, "type": "E6"}` with object keys
//! in sorted order. Roots are integer arrays, ideals are arrays of roots in
//! canonical order, affine words are arrays of generator indices (`0` is
//! `s₀`).

use serde_json::{json, Value};

use crate::glorious::{
    glorious_pairs, incident_triples, interval, minimal_nonabelian, semi_glorious,
    tail_decomposition, transition_root,
};
use crate::rootlets::RootletIndex;
use crate::{Result, RootIdeal, RootSystem};

pub const SCHEMA: u32 = 1;

/// Wraps `data` in the versioned envelope and renders it deterministically.
pub fn document(rs: &RootSystem, kind: &str, data: Value) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "type": rs.spec().to_string(),
        "kind": kind,
        "data": data,
    });
    serde_json::to_string_pretty(&doc).expect("JSON values always serialise") + "\n"
}

pub fn ideal(rs: &RootSystem, ideal: &RootIdeal) -> Value {
    json!(ideal.roots(rs))
}

pub fn info(rs: &RootSystem) -> Value {
    json!({
        "rank": rs.rank(),
        "positive_roots": rs.num_positive(),
        "theta": rs.theta(),
        "theta_breve": rs.theta_breve(),
        "theta_tilde": rs.theta_tilde(),
        "dual_coxeter": rs.dual_coxeter(),
        "heisenberg_size": rs.heisenberg_set().len(),
        "cartan": rs.cartan(),
        "long_simple": rs.long_simple().iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

pub fn roots(rs: &RootSystem) -> Value {
    json!(rs.positive_roots())
}

pub fn hasse(rs: &RootSystem) -> Value {
    let covers: Vec<[usize; 2]> = (0..rs.num_positive())
        .flat_map(|k| rs.upper_covers(k).into_iter().map(move |u| [k, u]))
        .collect();
    json!({ "roots": rs.positive_roots(), "covers": covers })
}

pub fn ideals(rs: &RootSystem, list: &[RootIdeal]) -> Value {
    Value::Array(
        list.iter()
            .map(|i| json!({ "members": ideal(rs, i), "abelian": i.is_abelian() }))
            .collect(),
    )
}

pub fn abelian(rs: &RootSystem, index: &RootletIndex) -> Value {
    Value::Array(
        index
            .abelian()
            .iter()
            .map(|a| json!({ "members": ideal(rs, &a.ideal), "word": a.word }))
            .collect(),
    )
}

pub fn rootlets(rs: &RootSystem, index: &RootletIndex) -> Value {
    Value::Array(
        index
            .entries()
            .iter()
            .map(|e| {
                json!({
                    "mu": rs.root(e.mu),
                    "w_mu": e.w_mu,
                    "i_min": ideal(rs, &e.i_min),
                    "i_max": ideal(rs, &e.i_max),
                    "fiber_size": e.fiber.len(),
                })
            })
            .collect(),
    )
}

/// Glorious quadruples ordered by edge.
pub fn glorious(rs: &RootSystem) -> Result<Value> {
    let mut pairs = glorious_pairs(rs)?;
    pairs.sort_by_key(|p| p.edge);
    Ok(Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "alpha": p.edge.0 + 1,
                    "alpha_prime": p.edge.1 + 1,
                    "eta": p.eta,
                    "eta_prime": p.eta_prime,
                })
            })
            .collect(),
    ))
}

pub fn semiglorious(rs: &RootSystem) -> Result<Value> {
    let s = semi_glorious(rs)?;
    Ok(json!({
        "alpha": s.edge.0 + 1,
        "alpha_prime": s.edge.1 + 1,
        "eta": s.eta,
        "eta_prime": s.eta_prime,
        "simple_diff": s.simple_diff,
    }))
}

pub fn tails(rs: &RootSystem) -> Result<Value> {
    let t = tail_decomposition(rs)?;
    let one = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    Ok(json!({
        "branch": t.branch + 1,
        "tails": t.tails.iter().map(|c| one(c)).collect::<Vec<_>>(),
        "nu": one(&t.nu),
        "odd": one(&t.odd),
    }))
}

pub fn interval_doc(rs: &RootSystem) -> Result<Value> {
    let iv = interval(rs)?;
    Ok(json!({
        "bottom": iv.bottom,
        "top": iv.top,
        "members": iv.members,
        "covers": iv.covers,
        "central": iv.central.iter().map(|c| json!({
            "edge": [c.edge.0 + 1, c.edge.1 + 1],
            "beta": c.beta + 1,
            "low": c.low,
            "high": c.high,
        })).collect::<Vec<_>>(),
        "classes": iv.classes.iter().map(|(r, c)| json!({ "root": r, "class": c })).collect::<Vec<_>>(),
    }))
}

pub fn transitions(rs: &RootSystem) -> Result<Value> {
    let mut out = Vec::new();
    for (i, j, k) in incident_triples(rs) {
        let g = transition_root(rs, i, j, k)?;
        out.push(json!({ "path": [i + 1, j + 1, k + 1], "gamma": g }));
    }
    Ok(Value::Array(out))
}

pub fn minimal(rs: &RootSystem) -> Result<Value> {
    Ok(Value::Array(
        minimal_nonabelian(rs)?
            .iter()
            .map(|m| {
                json!({
                    "alpha": m.edge.0 + 1,
                    "alpha_prime": m.edge.1 + 1,
                    "kind": m.kind,
                    "members": ideal(rs, &m.ideal),
                    "pair": [m.pair.0, m.pair.1],
                    "word": m.word,
                })
            })
            .collect(),
    ))
}

/// Every artifact of one root system in a single document body.
pub fn everything(rs: &RootSystem, index: &RootletIndex) -> Result<Value> {
    let simply_laced = rs.family().is_simply_laced();
    let de = matches!(rs.family(), crate::Family::D | crate::Family::E);
    let a = rs.family() == crate::Family::A;
    Ok(json!({
        "info": info(rs),
        "roots": roots(rs),
        "rootlets": rootlets(rs, index),
        "glorious": glorious(rs)?,
        "semiglorious": if simply_laced { Value::Null } else { semiglorious(rs)? },
        "tails": if de { tails(rs)? } else { Value::Null },
        "interval": if a { Value::Null } else { interval_doc(rs)? },
        "transitions": transitions(rs)?,
        "minimal_nonabelian": minimal(rs)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_ideal_is_empty_array() {
        let rs = RootSystem::parse("A2").unwrap();
        assert_eq!(ideal(&rs, &RootIdeal::empty(&rs)).to_string(), "[]");
    }

    #[test]
    fn e7_glorious_document() {
        let rs = RootSystem::parse("E7").unwrap();
        let v = glorious(&rs).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);
        assert_eq!(v[0]["eta"], json!([1, 1, 1, 1, 1, 1, 0]));
        let doc = document(&rs, "glorious", v.clone());
        assert!(doc.contains("\n  \"schema\": 1,"));
        assert_eq!(doc, document(&rs, "glorious", v));
    }
}
