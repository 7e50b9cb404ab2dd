//! Exact weight-hierarchy computations for linear codes over small finite
//! fields, together with the matrix-product construction and its lower and
//! upper bounds on generalized Hamming weights.
//!
//! Everything here works at "desk scale": fields of order at most 64 and
//! codes whose subcode or support enumerations fit under an explicit guard.
//! All enumeration results are deterministic, including witness choices,
//! regardless of how many worker threads are used.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod combin;
pub mod families;
pub mod gfield;
pub mod linalg;
pub mod mpc;

pub use codes::LinearCode;
pub use gfield::{Field, FieldElement};
pub use linalg::Matrix;
pub use mpc::MpcCode;

/// Default ceiling on the number of enumeration candidates a single
/// exhaustive computation may visit. Overridable via `GHWMPC_SCALE_GUARD`.
pub const DEFAULT_SCALE_GUARD: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_SCALE_GUARD`].
pub const SCALE_GUARD_ENV: &str = "GHWMPC_SCALE_GUARD";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("matrix is not non-singular by columns: rows 1..={t} with columns {cols:?} give a singular minor")]
    NotNsc { t: usize, cols: Vec<usize> },
    #[error("division by zero in field arithmetic")]
    DivisionByZero,
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Knobs for the exhaustive scans.
#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Maximum number of candidates (subspaces or coordinate subsets) a
    /// single computation may enumerate before refusing.
    pub guard: u64,
    /// Run scans on the rayon pool when the `parallel` feature is enabled.
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            guard: guard_from_env(),
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl EnumOptions {
    pub fn sequential() -> Self {
        EnumOptions {
            parallel: false,
            ..EnumOptions::default()
        }
    }
}

fn guard_from_env() -> u64 {
    match std::env::var(SCALE_GUARD_ENV) {
        Ok(v) => v.trim().parse().unwrap_or(DEFAULT_SCALE_GUARD),
        Err(_) => DEFAULT_SCALE_GUARD,
    }
}
