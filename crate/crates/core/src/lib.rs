//! Lattice vertex algebras, free-field screening operators and their
//! kernels at even levels.

pub mod error;
pub mod rational;
pub mod scalar;
pub mod rootdata;
pub mod lattice;
pub mod freefield;
pub mod vertexop;
pub mod virasoro;
pub mod screening;
pub mod linalg;
pub mod characters;
pub mod degeneracy;
pub mod expr;
pub mod cli;

pub use error::{Error, Result};
