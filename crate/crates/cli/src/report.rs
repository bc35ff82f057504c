//! Report assembly and emission. All rationals are serialized as "num/den"
//! strings; maps are ordered, so a fixed seed reproduces byte-identical
//! output.

use grm_core::chains::{ChainVerdict, RejectiveChain};
use grm_core::gamma::QHCertificate;
use grm_core::measure::{MeasureValue, MeasureWitness};
use grm_core::quiver::BoundQuiverAlgebra;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub algebra: String,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_file: Option<String>,
    pub max_submodules: usize,
    pub max_enum: u128,
    pub max_hom_enum: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_cap: Option<usize>,
    pub seed: u64,
    pub format: String,
}

#[derive(Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    #[serde(flatten)]
    pub payload: serde_json::Value,
}

pub fn dims_map(alg: &BoundQuiverAlgebra, dims: &[usize]) -> BTreeMap<String, usize> {
    (0..alg.quiver().vertex_count())
        .map(|v| (alg.quiver().vertex_name(v).to_string(), dims[v]))
        .collect()
}

pub fn measure_payload(
    alg: &BoundQuiverAlgebra,
    measure: &MeasureValue,
    witness: &MeasureWitness,
) -> serde_json::Value {
    let chain: Vec<serde_json::Value> = witness
        .chain
        .iter()
        .zip(&witness.lengths)
        .map(|(node, len)| {
            serde_json::json!({
                "dims": dims_map(alg, &node.dim_vector()),
                "length": len.to_string(),
            })
        })
        .collect();
    serde_json::json!({
        "measure": measure.to_strings(),
        "witness": chain,
    })
}

pub fn chain_payload(chain: &RejectiveChain) -> serde_json::Value {
    let alg = chain.algebra.as_ref();
    let steps: Vec<serde_json::Value> = chain
        .steps
        .iter()
        .map(|s| {
            let mut obj = serde_json::Map::new();
            obj.insert(
                "dims".into(),
                serde_json::to_value(dims_map(alg, s.module.dims())).unwrap(),
            );
            if let Some(mu) = &s.measure {
                obj.insert("measure".into(), serde_json::to_value(mu.to_strings()).unwrap());
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    let phi: Vec<serde_json::Value> = chain
        .phi
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut obj = serde_json::Map::new();
            obj.insert("id".into(), serde_json::json!(format!("Y{}", i + 1)));
            obj.insert(
                "dims".into(),
                serde_json::to_value(dims_map(alg, c.representative.dims())).unwrap(),
            );
            obj.insert("level".into(), serde_json::json!(c.level));
            obj.insert("multiplicity".into(), serde_json::json!(c.multiplicity));
            if let Some(mu) = &c.measure {
                obj.insert("measure".into(), serde_json::to_value(mu.to_strings()).unwrap());
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::json!({
        "ell": chain.ell(),
        "kind": chain.kind.to_string(),
        "steps": steps,
        "phi": phi,
    })
}

pub fn certificate_payload(alg: &BoundQuiverAlgebra, cert: &QHCertificate) -> serde_json::Value {
    let labels: Vec<serde_json::Value> = cert
        .labels
        .iter()
        .map(|l| {
            serde_json::json!({
                "id": l.id,
                "dims": dims_map(alg, &l.dims),
                "level": l.level,
                "multiplicity": l.multiplicity,
                "dim_projective": l.dim_projective,
                "dim_trace": l.dim_trace,
                "dim_standard": l.dim_standard,
                "U_decomposition": l.u_decomposition.iter().map(|(id, m)| {
                    serde_json::json!({"id": id, "multiplicity": m})
                }).collect::<Vec<_>>(),
                "pd_simple": l.pd_simple,
                "pd_standard": l.pd_standard,
                "checks": {
                    "a": l.check_a,
                    "b": l.check_b,
                    "strong": l.check_strong,
                },
                "failures": l.failures,
            })
        })
        .collect();
    serde_json::json!({
        "ell": cert.ell,
        "gldim": cert.gldim,
        "dim_gamma": cert.dim_gamma,
        "labels": labels,
        "verdict": cert.verdict(),
    })
}

pub fn verdict_payload(verdict: &ChainVerdict) -> serde_json::Value {
    let levels: Vec<serde_json::Value> = verdict
        .levels
        .iter()
        .map(|l| {
            serde_json::json!({
                "level": l.level,
                "left_rejective": l.left_rejective,
                "prerejective": l.prerejective,
                "rejective": l.rejective,
                "failures": l.failures,
            })
        })
        .collect();
    serde_json::json!({
        "levels": levels,
        "left_rejective": verdict.left_rejective,
        "prerejective": verdict.prerejective,
        "rejective": verdict.rejective,
    })
}

pub fn decompose_payload(
    alg: &BoundQuiverAlgebra,
    dec: &grm_core::decomp::Decomposition,
) -> serde_json::Value {
    let parts: Vec<serde_json::Value> = dec
        .groups
        .iter()
        .map(|g| {
            let rep = &dec.summands[g.representative].module;
            serde_json::json!({
                "dims": dims_map(alg, rep.dims()),
                "multiplicity": g.members.len(),
            })
        })
        .collect();
    serde_json::json!({
        "total_dims": dims_map(alg, dec.original.dims()),
        "parts": parts,
    })
}

/// Flatten a JSON value into tab-separated `path<TAB>value` lines; carries
/// the same numeric content as the JSON format.
pub fn to_tsv(value: &serde_json::Value) -> String {
    let mut lines = Vec::new();
    flatten("", value, &mut lines);
    let mut out = String::new();
    for (k, v) in lines {
        out.push_str(&k);
        out.push('\t');
        out.push_str(&v);
        out.push('\n');
    }
    out
}

fn flatten(prefix: &str, value: &serde_json::Value, out: &mut Vec<(String, String)>) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        serde_json::Value::Null => out.push((prefix.to_string(), "null".into())),
        serde_json::Value::Bool(b) => out.push((prefix.to_string(), b.to_string())),
        serde_json::Value::Number(n) => out.push((prefix.to_string(), n.to_string())),
        serde_json::Value::String(s) => out.push((prefix.to_string(), s.clone())),
    }
}

/// Render a full report in the requested format.
pub fn render(report: &Report, format: &str) -> String {
    match format {
        "tsv" => to_tsv(&serde_json::to_value(report).unwrap()),
        _ => {
            let mut s = serde_json::to_string_pretty(report).unwrap();
            s.push('\n');
            s
        }
    }
}
