//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A parameter was outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Evaluation requested at a pole of the map (e.g. the Cayley transform at -i).
    #[error("evaluation at a pole: {0}")]
    PoleEvaluation(String),

    /// A weight with a negative exponent was evaluated exactly at its center.
    #[error("weight evaluated at a singular center {0}")]
    SingularEvaluation(String),

    /// The polynomial root finder did not reach its accuracy target.
    #[error("root finder did not converge: {0}")]
    RootFinding(String),

    /// A quadrature rule could not produce a usable value.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A Hölder allocation does not match the factorization it is applied to.
    #[error("allocation mismatch: {0}")]
    AllocationMismatch(String),

    /// A requested covering map kind is not supported by this operation.
    #[error("unsupported covering map: {0}")]
    UnsupportedMap(String),

    /// A point failed a domain membership precondition.
    #[error("point outside domain: {0}")]
    OutsideDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
