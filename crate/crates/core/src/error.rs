use thiserror::Error;

/// Errors raised by the library. Each variant names the module-level
/// precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {series}{rank}: {reason}")]
    InvalidRootSystem {
        series: String,
        rank: usize,
        reason: String,
    },
    #[error("level ell = {ell} is not admissible: {reason}")]
    InvalidLevel { ell: i64, reason: String },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("sublattice is not contained in the ambient lattice")]
    NotContained,
    #[error("fractional pairing {pairing} between screening and state; use the fractional residue mode")]
    FractionalPairing { pairing: String },
    #[error("mode z^{mode} needs {order} derivatives, above the cap {cap}")]
    ModeOutOfWindow {
        mode: String,
        order: i64,
        cap: i64,
    },
    #[error("state is not homogeneous in the lattice grading")]
    MixedMomentum,
    #[error("term outside the expected layer: {0}")]
    LayerMismatch(String),
    #[error("weyl power undefined: {0}")]
    WeylPower(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
