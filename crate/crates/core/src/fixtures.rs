//! Small stock algebras used throughout the test suites and docs.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::module::Representation;
use crate::quiver::{build_algebra, AlgebraSpec, BoundQuiverAlgebra, Quiver};
use std::sync::Arc;

/// Loop `a` at vertex 1, arrow `b: 1 -> 2`, relations `a.a.a` and
/// `a` followed by `b`.
pub fn lambda1(prime: u64) -> Result<Arc<BoundQuiverAlgebra>> {
    lambda1_with_bound(prime, 4)
}

pub fn lambda1_with_bound(prime: u64, bound: usize) -> Result<Arc<BoundQuiverAlgebra>> {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "1".into()),
            ("b".into(), "1".into(), "2".into()),
        ],
    )?;
    build_algebra(AlgebraSpec {
        quiver,
        relations: vec![vec![(1, vec![0, 0, 0])], vec![(1, vec![0, 1])]],
        nilpotency_bound: bound,
        prime,
    })
}

/// Loop `a` at vertex 1, two parallel arrows `b, c: 1 -> 2`, relations
/// `a.a.a`, `a` then `b`, `a` then `c`.
pub fn lambda2(prime: u64) -> Result<Arc<BoundQuiverAlgebra>> {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "1".into()),
            ("b".into(), "1".into(), "2".into()),
            ("c".into(), "1".into(), "2".into()),
        ],
    )?;
    build_algebra(AlgebraSpec {
        quiver,
        relations: vec![
            vec![(1, vec![0, 0, 0])],
            vec![(1, vec![0, 1])],
            vec![(1, vec![0, 2])],
        ],
        nilpotency_bound: 4,
        prime,
    })
}

/// The Kronecker quiver: two arrows `a, b: 1 -> 2`, no relations.
pub fn kronecker(prime: u64) -> Result<Arc<BoundQuiverAlgebra>> {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "1".into(), "2".into()),
        ],
    )?;
    build_algebra(AlgebraSpec {
        quiver,
        relations: vec![],
        nilpotency_bound: 2,
        prime,
    })
}

/// Two vertices, no arrows: a semisimple algebra.
pub fn semisimple2(prime: u64) -> Result<Arc<BoundQuiverAlgebra>> {
    let quiver = Quiver::new(vec!["1".into(), "2".into()], vec![])?;
    build_algebra(AlgebraSpec {
        quiver,
        relations: vec![],
        nilpotency_bound: 1,
        prime,
    })
}

/// The regular Kronecker module with dimension vector (2, 2): one arrow acts
/// as the identity, the other as a nilpotent Jordan block.
pub fn kronecker_regular(alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
    let f = alg.field();
    let id = Matrix::identity(2, f);
    let jordan = Matrix::from_rows(&[vec![0, 1], vec![0, 0]], f);
    Representation::new(alg.clone(), vec![2, 2], vec![id, jordan])
}
