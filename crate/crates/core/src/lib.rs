//! Gabidulin codes over a tower F_p ⊂ F_q ⊂ F_{q^m}: field arithmetic, q-linearized
//! polynomials, encoding, exhaustive distance oracles and the root-space machinery that
//! decides deep holes.

#![no_std]

extern crate alloc;

pub mod code;
pub mod deephole;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fp;
pub mod linpoly;
pub mod matrix;
pub mod quadric;

pub use code::{GabidulinCode, Metric, Word};
pub use error::{Error, Result};
pub use field::{BasisSpec, Elem, FieldCtx};
pub use linpoly::{LinPoly, QDegree, Subspace};
