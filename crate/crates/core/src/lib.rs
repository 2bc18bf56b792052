//! Symbolic structure of the Terwilliger algebra of a factorial association
//! scheme over a prime field or the rationals.
//!
//! The scheme is the direct product of trivial schemes on sets of sizes
//! `|U_1|, …, |U_n|`. Its Terwilliger algebra T has a basis `B_{g,h,i}`
//! indexed by mask triples, with products that are single basis elements
//! times valencies. On top of that basis this crate computes the center, the
//! Jacobson radical and its nilpotent index, the semisimple quotient with its
//! Wedderburn–Artin blocks, and the Frobenius verdict. The [`oracle`] module
//! realizes everything as explicit matrices for cross-checking, and
//! [`verify`] runs the cross-checks.

pub mod algebra;
pub mod center;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod quotient;
pub mod radical;
pub mod report;
pub mod scalar;
pub mod scheme;
pub mod verify;

pub use algebra::{AlgebraElt, B1Elt, BasisTriple};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use scheme::{Mask, SchemeSpec};
