//! Exact calculus of linear relations (multivalued linear operators) on
//! `F^n` with `F = ℚ(i)`, idempotent relations and their triple
//! representations, and the Friedrichs/Dixmier angles between subspaces.

pub mod angles;
pub mod cli;
pub mod error;
pub mod format;
pub mod idempotent;
pub mod matrix;
mod rational;
pub mod relation;
pub mod scalar;
pub mod subspace;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{ExactMatrix, Vector};
pub use relation::{LinearRelation, RelationParts};
pub use scalar::GaussianRational;
pub use subspace::Subspace;
