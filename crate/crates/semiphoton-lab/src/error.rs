use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Constants record missing, malformed, or violating a record invariant.
    /// The message names the offending field.
    #[error("constants: {0}")]
    Constants(String),
    /// An argument violated an operation precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Evaluation hit a vanishing denominator or an undefined configuration.
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
