//! Error types shared across the library.

use thiserror::Error;

/// Library-wide error type.
///
/// The variants map onto the CLI exit-code contract: `Parse` and `Input`
/// are caller mistakes, `Precondition` means an algorithm's hypothesis is
/// not met by the instance, and `Invariant` signals an internal bug (a
/// state the underlying arguments rule out).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
