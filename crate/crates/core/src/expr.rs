//! The module expression mini-language used by the CLI:
//! `P:v`, `I:v`, `S:v`, `Lambda`, `DLambda`, summed with `+`
//! (e.g. `Lambda+DLambda`), plus `@file.json` for an explicit matrix module.

use crate::error::{Error, Result};
use crate::io::module_from_file;
use crate::module::{direct_sum, Representation};
use crate::quiver::{coregular, injective, projective, regular, simple, BoundQuiverAlgebra};
use std::path::Path;
use std::sync::Arc;

/// Parse one expression against an algebra. `base_dir` anchors `@file`
/// references.
pub fn parse_module_expr(
    alg: &Arc<BoundQuiverAlgebra>,
    expr: &str,
    base_dir: &Path,
) -> Result<Representation> {
    let mut parts = Vec::new();
    for atom in expr.split('+') {
        let atom = atom.trim();
        if atom.is_empty() {
            return Err(Error::InvalidInput(format!("empty summand in `{expr}`")));
        }
        parts.push(parse_atom(alg, atom, base_dir)?);
    }
    if parts.len() == 1 {
        return Ok(parts.pop().unwrap());
    }
    Ok(direct_sum(&parts)?.module)
}

fn parse_atom(
    alg: &Arc<BoundQuiverAlgebra>,
    atom: &str,
    base_dir: &Path,
) -> Result<Representation> {
    if atom == "Lambda" {
        return regular(alg);
    }
    if atom == "DLambda" {
        return coregular(alg);
    }
    if let Some(path) = atom.strip_prefix('@') {
        return module_from_file(alg, &base_dir.join(path));
    }
    if let Some((kind, vertex)) = atom.split_once(':') {
        let v = alg.quiver().vertex_index(vertex.trim())?;
        return match kind.trim() {
            "P" => projective(alg, v),
            "I" => injective(alg, v),
            "S" => simple(alg, v),
            other => Err(Error::InvalidInput(format!(
                "unknown module constructor `{other}` in `{atom}`"
            ))),
        };
    }
    Err(Error::InvalidInput(format!(
        "cannot parse module expression atom `{atom}`"
    )))
}
