//! JSON file formats: algebra descriptions, explicit matrix modules, and
//! user-supplied chains.
//!
//! Relation paths are listed first-to-last in order of application, so a
//! composite "apply alpha, then beta" is the list `["alpha", "beta"]`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::Representation;
use crate::quiver::{build_algebra, AlgebraSpec, BoundQuiverAlgebra, Quiver, Relation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowFile {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationTermFile {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// The algebra input file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub prime: u64,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTermFile>>,
    pub nilpotency_bound: usize,
}

impl AlgebraFile {
    pub fn to_spec(&self) -> Result<AlgebraSpec> {
        let quiver = Quiver::new(
            self.vertices.clone(),
            self.arrows
                .iter()
                .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
                .collect(),
        )?;
        let relations: Vec<Relation> = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|term| {
                        let path = term
                            .path
                            .iter()
                            .map(|name| quiver.arrow_index(name))
                            .collect::<Result<Vec<_>>>()?;
                        Ok((term.coeff, path))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraSpec {
            quiver,
            relations,
            nilpotency_bound: self.nilpotency_bound,
            prime: self.prime,
        })
    }
}

pub fn algebra_from_str(text: &str) -> Result<Arc<BoundQuiverAlgebra>> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("algebra file: {e}")))?;
    build_algebra(file.to_spec()?)
}

pub fn algebra_from_file(path: &Path) -> Result<Arc<BoundQuiverAlgebra>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    algebra_from_str(&text)
}

/// Explicit matrix form of a module: per-vertex dimensions and per-arrow
/// matrices (rows = dimension at the target). Missing arrows act as zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn to_representation(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        let quiver = alg.quiver();
        let mut dims = vec![0usize; quiver.vertex_count()];
        for (name, &d) in &self.dims {
            dims[quiver.vertex_index(name)?] = d;
        }
        let field = alg.field();
        let arrows = quiver
            .arrows()
            .iter()
            .map(|arrow| match self.arrows.get(&arrow.name) {
                Some(rows) => {
                    let m = Matrix::from_rows(rows, field);
                    if m.rows() != dims[arrow.to] || m.cols() != dims[arrow.from] {
                        return Err(Error::DimensionMismatch(format!(
                            "matrix for arrow `{}` must be {}x{}",
                            arrow.name, dims[arrow.to], dims[arrow.from]
                        )));
                    }
                    Ok(m)
                }
                None => Ok(Matrix::zeros(dims[arrow.to], dims[arrow.from], field)),
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(alg.clone(), dims, arrows)
    }

    pub fn from_representation(m: &Representation) -> Self {
        let quiver = m.algebra().quiver();
        let dims = (0..quiver.vertex_count())
            .map(|v| (quiver.vertex_name(v).to_string(), m.dims()[v]))
            .collect();
        let arrows = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mat = m.arrow_matrix(i);
                let rows = (0..mat.rows())
                    .map(|r| mat.row(r).iter().map(|&x| x as i64).collect())
                    .collect();
                (a.name.clone(), rows)
            })
            .collect();
        ModuleFile { dims, arrows }
    }
}

pub fn module_from_file(alg: &Arc<BoundQuiverAlgebra>, path: &Path) -> Result<Representation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let file: ModuleFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("module file: {e}")))?;
    file.to_representation(alg)
}

/// One entry of a chain level: either a module expression or an inline
/// explicit module.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainEntry {
    Expr(String),
    Inline(ModuleFile),
}

/// A user-supplied chain of subcategories: `levels[0]` lists the
/// indecomposable classes of the largest subcategory, and each later level
/// must be contained in the previous one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainFile {
    pub levels: Vec<Vec<ChainEntry>>,
}

impl ChainFile {
    pub fn to_levels(
        &self,
        alg: &Arc<BoundQuiverAlgebra>,
        base_dir: &Path,
    ) -> Result<Vec<Vec<Representation>>> {
        self.levels
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|entry| match entry {
                        ChainEntry::Expr(e) => crate::expr::parse_module_expr(alg, e, base_dir),
                        ChainEntry::Inline(m) => m.to_representation(alg),
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn chain_from_file(path: &Path) -> Result<ChainFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("chain file: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LAMBDA1_JSON: &str = r#"{
        "prime": 2,
        "vertices": ["1", "2"],
        "arrows": [
            {"name": "α", "from": "1", "to": "1"},
            {"name": "β", "from": "1", "to": "2"}
        ],
        "relations": [
            [{"coeff": 1, "path": ["α", "α", "α"]}],
            [{"coeff": 1, "path": ["α", "β"]}]
        ],
        "nilpotency_bound": 4
    }"#;

    #[test]
    fn algebra_file_round_trip() {
        let alg = algebra_from_str(LAMBDA1_JSON).unwrap();
        assert_eq!(alg.dim(), 5);
        let p1 = crate::quiver::projective(&alg, 0).unwrap();
        assert_eq!(p1.dims(), &[3, 1]);
    }

    #[test]
    fn coefficients_are_reduced_mod_p() {
        // coeff 3 = 1 mod 2: same algebra.
        let text = LAMBDA1_JSON.replace(r#""coeff": 1, "path": ["α", "α", "α"]"#,
                                        r#""coeff": 3, "path": ["α", "α", "α"]"#);
        let alg = algebra_from_str(&text).unwrap();
        assert_eq!(alg.dim(), 5);
    }

    #[test]
    fn module_file_round_trip() {
        let alg = algebra_from_str(LAMBDA1_JSON).unwrap();
        let p1 = crate::quiver::projective(&alg, 0).unwrap();
        let file = ModuleFile::from_representation(&p1);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: ModuleFile = serde_json::from_str(&text).unwrap();
        let back = parsed.to_representation(&alg).unwrap();
        assert!(back == p1);
    }

    #[test]
    fn module_file_with_missing_arrows_defaults_to_zero() {
        let alg = algebra_from_str(LAMBDA1_JSON).unwrap();
        let parsed: ModuleFile =
            serde_json::from_str(r#"{"dims": {"1": 1, "2": 0}}"#).unwrap();
        let rep = parsed.to_representation(&alg).unwrap();
        assert_eq!(rep.dims(), &[1, 0]);
        assert!(rep.arrow_matrices().iter().all(|m| m.is_zero()));
    }

    #[test]
    fn bad_matrix_shape_is_rejected() {
        let alg = algebra_from_str(LAMBDA1_JSON).unwrap();
        let parsed: ModuleFile = serde_json::from_str(
            r#"{"dims": {"1": 1, "2": 1}, "arrows": {"β": [[1, 0]]}}"#,
        )
        .unwrap();
        assert!(parsed.to_representation(&alg).is_err());
    }

    #[test]
    fn chain_file_parses_mixed_entries() {
        let alg = algebra_from_str(LAMBDA1_JSON).unwrap();
        let chain: ChainFile = serde_json::from_str(
            r#"{"levels": [["P:1", {"dims": {"1": 1, "2": 0}}], ["S:1"]]}"#,
        )
        .unwrap();
        let levels = chain.to_levels(&alg, Path::new(".")).unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[0].len(), 2);
        assert_eq!(levels[0][1].dims(), &[1, 0]);
    }
}
