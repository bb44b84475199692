use thiserror::Error;

/// Errors surfaced by matrix construction, bound computation, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes are incompatible with the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input violates a mathematical domain requirement (negativity,
    /// non-unit sums, non-PSD state, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented operation precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Malformed input file or schema violation; names the offending field.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
