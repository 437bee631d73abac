use thiserror::Error;

/// Library error type. Variants map onto the CLI exit-code contract:
/// everything except `ResourceGuard` is an ordinary validation/argument
/// failure.
#[derive(Debug, Error)]
pub enum Error {
    /// Caller passed an argument outside an operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Shapes of the operands do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Input data fails a required predicate (marginals, square kind, ...).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A guarded computation would exceed its configured size budget.
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
