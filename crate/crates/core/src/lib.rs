//! Weighted Gabriel-Roiter measures for modules over bound quiver algebras,
//! the rejective chain constructions built from them, and certification of
//! the resulting endomorphism algebras as left strongly quasihereditary.
//!
//! Everything is exact: matrices live over a prime field `F_p`, lengths and
//! measures over the rationals.
//!
//! ```
//! use grm_core::chains::gr_chain;
//! use grm_core::config::Caps;
//! use grm_core::gamma::certify_chain;
//! use grm_core::io::algebra_from_str;
//! use grm_core::module::LengthFunction;
//! use grm_core::quiver::projective;
//!
//! // A loop `a` at vertex 1 with an arrow `b` to vertex 2, bound by the
//! // relations a.a.a = 0 and (a then b) = 0.
//! let alg = algebra_from_str(r#"{
//!     "prime": 2,
//!     "vertices": ["1", "2"],
//!     "arrows": [{"name": "a", "from": "1", "to": "1"},
//!                {"name": "b", "from": "1", "to": "2"}],
//!     "relations": [[{"coeff": 1, "path": ["a", "a", "a"]}],
//!                   [{"coeff": 1, "path": ["a", "b"]}]],
//!     "nilpotency_bound": 4
//! }"#).unwrap();
//!
//! let p1 = projective(&alg, 0).unwrap();
//! let lambda = LengthFunction::ones(2);
//! let caps = Caps::default();
//!
//! let chain = gr_chain(&p1, &lambda, &caps).unwrap();
//! assert_eq!(chain.ell(), 3);
//! assert_eq!(chain.steps[0].measure.as_ref().unwrap().to_strings(),
//!            ["1/1", "2/1", "4/1"]);
//!
//! let cert = certify_chain(&chain, &caps).unwrap();
//! assert_eq!(cert.verdict(), "left-strongly-quasihereditary");
//! assert!(cert.gldim <= chain.ell());
//! ```

// Explicit index loops read better than iterator chains in the matrix code,
// and the arithmetic methods on field/rational values follow the
// context-object style rather than operator traits.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::should_implement_trait)]

pub mod chains;
pub mod config;
pub mod decomp;
pub mod error;
pub mod expr;
pub mod field;
pub mod fixtures;
pub mod gamma;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod measure;
pub mod module;
pub mod quiver;
pub mod rational;
pub mod subspace;

pub use config::Caps;
pub use error::{Error, Result};
pub use field::{PrimeField, Scalar};
pub use matrix::Matrix;
pub use module::{LengthFunction, Morphism, Representation, Submodule};
pub use quiver::{build_algebra, AlgebraSpec, BoundQuiverAlgebra, Quiver};
pub use rational::Rational;
pub use subspace::Subspace;
