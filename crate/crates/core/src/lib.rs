//! Exact deformation cohomology of nilpotent Lie algebras.

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod ideals;
pub mod lie;
pub mod linalg;
pub mod reproduce;
pub mod scalar;

pub use error::Error;
pub use lie::{StructureConstants, TwoCochain};
pub use linalg::ExactMatrix;
pub use scalar::{Field, Scalar};
