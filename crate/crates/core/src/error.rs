use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("{0} is not a prime in the supported range (2 <= p < 2^31)")]
    BadPrime(u64),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("nilpotency bound {bound} is too small: path `{path}` of length >= {bound} does not lie in the ideal")]
    AdmissibilityViolation { bound: usize, path: String },
    #[error("modules belong to different algebras")]
    AlgebraMismatch,
    #[error("subspaces are not closed under the arrow action")]
    NotSubmodule,
    #[error("search cap exceeded during {context}: needed {needed}, cap {cap}")]
    SearchCapExceeded {
        context: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("submodule lattice cap exceeded: more than {cap} nodes (found {found} so far)")]
    LatticeCapExceeded { cap: usize, found: usize },
    #[error("module is not local: {0}")]
    NotLocal(String),
    #[error("projective dimension exceeds cap {0}")]
    PdCapExceeded(usize),
    #[error("internal cross-check failed: {0}")]
    CrossCheckMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
