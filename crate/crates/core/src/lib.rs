//! Exact computer algebra for anticommutative algebras given by structure
//! constants.
//!
//! The crate derives the Yamaguti ternary bracket, left translations and the
//! Yamagutian from a binary bracket, and checks the identities relating them
//! (Sagle–Yamaguti, reductivity, hidden associativity, the general Lie triple
//! system axioms, the Mal'tsev identity) by exhaustive polarized substitution
//! over exact rationals.
//!
//! ```
//! use maltsev::catalog::builtin;
//! use maltsev::checker::{check_builtin, BuiltinIdentity};
//!
//! let m7 = builtin("m7").unwrap();
//! assert!(check_builtin(&m7, BuiltinIdentity::Maltsev).unwrap().holds);
//! assert!(!check_builtin(&m7, BuiltinIdentity::Jacobi).unwrap().holds);
//! ```

pub mod algebra;
pub mod catalog;
pub mod checker;
pub mod dsl;
mod error;
pub mod linalg;
pub mod scalar;

pub use algebra::{Algebra, RawAlgebra, RawBracket, ValidationReport, Violation};
pub use error::{Error, Result};
pub use linalg::{operator_commutator, Operator, Vector};
pub use scalar::Scalar;
