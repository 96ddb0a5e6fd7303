//! JSON encodings of core types.

use cellgeom_core::cells::{CellPartition, Tableau, WGraph};
use cellgeom_core::coxeter::CoxeterElement;
use cellgeom_core::hecke::KlCache;
use cellgeom_core::laurent::LaurentPoly;
use cellgeom_core::posbasis::CellReport;
use cellgeom_core::schubert::{ReduceOutcome, VerificationReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Integers that fit in `i64` as numbers, larger ones as strings.
pub fn int(c: &BigInt) -> Value {
    c.to_i64().map(Value::from).unwrap_or_else(|| Value::String(c.to_string()))
}

/// `[[exponent, coefficient], ...]` in increasing exponent.
pub fn laurent(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, int(c)])).collect())
}

pub fn elt(e: &CoxeterElement) -> Value {
    Value::String(e.to_string())
}

pub fn tableau(t: &Tableau) -> Value {
    json!(t.rows())
}

pub fn kl_row(x: &CoxeterElement, w: &CoxeterElement, h: &LaurentPoly) -> Value {
    json!({ "x": elt(x), "w": elt(w), "h": laurent(h) })
}

pub fn partition(p: &CellPartition, cache: &KlCache) -> Value {
    let cells: Vec<Vec<String>> = p.elements(cache).iter().map(|c| c.iter().map(|e| e.to_string()).collect()).collect();
    json!(cells)
}

pub fn wgraph(g: &WGraph) -> Value {
    let vertices: Vec<Value> =
        g.vertices.iter().zip(&g.descents).map(|(v, d)| json!({ "elt": elt(v), "descents": d })).collect();
    let edges: Vec<Value> =
        g.edges.iter().map(|(&(i, j), mu)| json!([elt(&g.vertices[i]), elt(&g.vertices[j]), int(mu)])).collect();
    json!({ "vertices": vertices, "edges": edges })
}

pub fn cell_report(r: &CellReport) -> Value {
    let patterns: Vec<Value> = r
        .patterns
        .iter()
        .map(|p| Value::Array(p.iter().map(|(x, y, m)| json!({ "x": elt(x), "y": elt(y), "m": laurent(m) })).collect()))
        .collect();
    let pairs: Vec<Value> = r.same_right_cell_pairs.iter().map(|(x, y)| json!([elt(x), elt(y)])).collect();
    json!({
        "label": r.label(),
        "partition": r.partition,
        "two_sided": r.two_sided,
        "contains_w_lambda": r.contains_w_lambda,
        "cell": r.cell.iter().map(elt).collect::<Vec<_>>(),
        "count": r.count,
        "patterns": patterns,
        "same_right_cell_pairs": pairs,
    })
}

fn histogram(h: &std::collections::BTreeMap<usize, usize>) -> Value {
    Value::Object(h.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect::<Map<_, _>>())
}

pub fn reduce_outcome(o: &ReduceOutcome, min_each: usize) -> Value {
    json!({
        "kind": o.kind.name(),
        "seed": o.seed,
        "draws": o.draws,
        "lhs_true": o.lhs_true,
        "rhs_true": o.rhs_true,
        "pass": o.passed(min_each),
        "counterexample": o.counterexample.as_ref().map(|a| {
            a.iter().map(|m| m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>()
        }),
    })
}

pub fn verification(r: &VerificationReport, reductions: &[(String, bool)]) -> Value {
    let conditions: Vec<Value> =
        r.conditions.iter().map(|c| json!({ "a": c.a, "b": c.b, "bound": c.bound })).collect();
    json!({
        "target": r.target.name(),
        "samples": r.samples,
        "seed": r.seed,
        "variables": r.variables,
        "conditions": conditions,
        "inclusion_pass": r.inclusion_pass,
        "rejection_pass": r.rejection_pass,
        "tangent_dims": {
            "slice": histogram(&r.slice_tangent_dims),
            "ks": histogram(&r.ks_tangent_dims),
            "origin_slice": r.origin_slice_tangent_dim,
            "origin_ks": r.origin_ks_tangent_dim,
        },
        "reductions": Value::Object(reductions.iter().map(|(k, v)| (k.clone(), Value::Bool(*v))).collect()),
        "failures": r.failures,
        "notes": r.notes,
        "pass": r.passed() && reductions.iter().all(|(_, ok)| *ok),
    })
}
