use thiserror::Error;

/// Errors raised by the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("constraint violation: {0}")]
    Constraint(String),

    #[error("subspace is not stable under the operator (basis vector {0} leaves the span)")]
    StabilityViolation(usize),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("unsupported parameter t = {0}")]
    UnsupportedParameter(String),

    #[error("Hilbert function not stable on the requested window")]
    NotStable,

    #[error("singular count mismatch: expected {expected}, got {got}")]
    Mismatch { expected: usize, got: usize },

    #[error("no affine chart contains the zero vector")]
    ChartFailure,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing dependency: {0}")]
    Dependency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
