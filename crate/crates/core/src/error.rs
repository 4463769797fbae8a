use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two points (or a point and an operation) disagree about the space they live in.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    /// A point fails the coordinate invariants of its space kind.
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this space kind.
    #[error("unsupported space kind: {0}")]
    Capability(String),

    /// Malformed input (bad probabilities, failed callable validation, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An estimator ran out of budget before observing a single admissible
    /// configuration. Distinct from a zero estimate.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
