//! Exact invariant theory of Killing tensors on the Minkowski plane and of
//! binary forms.
//!
//! All arithmetic is exact over the rationals; there is no floating point
//! anywhere in the crate.

pub mod derivations;
pub mod error;
pub mod family;
pub mod group_action;
pub mod invariant_solver;
pub mod killing_space;
pub mod linalg;
pub mod ratpoly;
pub mod sampling;

pub use error::{Error, Result};
pub use ratpoly::{Monomial, Poly, Rational, VarKind, VarTable};
