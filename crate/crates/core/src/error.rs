//! Crate-wide error type.
//!
//! Degeneracy of an input configuration (a vanishing covariant, a kernel of
//! the wrong dimension, ...) is reported through dedicated variants so callers
//! can distinguish "mathematically not applicable" from genuine bugs.

use thiserror::Error;

/// Errors produced by the exact and numeric kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A zero polynomial was passed where a nonzero one is required.
    #[error("zero polynomial passed to {op}")]
    ZeroPolynomial { op: &'static str },

    /// Discriminant of a constant polynomial.
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,

    /// Input values that must be pairwise distinct repeat.
    #[error("values must be pairwise distinct: positions {i} and {j} agree")]
    RepeatedValues { i: usize, j: usize },

    /// A genericity guard failed: the named covariant or guard quantity vanishes.
    #[error("degenerate configuration: {what} vanishes")]
    Degenerate { what: String },

    /// A kernel or solution space does not have the expected dimension.
    #[error("{system}: kernel has dimension {got}, expected {expected}")]
    KernelDimension {
        system: &'static str,
        got: usize,
        expected: usize,
    },

    /// Root finding did not converge within the iteration budget.
    #[error("root finding did not converge for {poly}")]
    NonConvergence { poly: String },

    /// Numeric clustering could not decide multiplicities at the working precision.
    #[error("ambiguous root clustering for {poly} at {digits} digits")]
    AmbiguousClustering { poly: String, digits: u32 },

    /// A discriminant expected to be a perfect square (up to a constant) is not.
    #[error("discriminant is not a perfect square up to a constant")]
    NotASquare,

    /// A resultant factorization does not have the predicted shape.
    #[error("factorization shape failed: {detail}")]
    FactorShape { detail: String },

    /// An identity the construction guarantees failed to hold.
    #[error("internal consistency: {0}")]
    Inconsistency(String),

    /// Malformed user-facing input (CLI / JSON).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
