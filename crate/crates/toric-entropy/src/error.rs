//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad argument to an operation (out-of-range index, mask length
    /// mismatch, non-normalized amplitudes, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A surface document failed validation; the message names the first
    /// violated invariant.
    #[error("surface validation failed: {0}")]
    Validation(String),

    /// A computation would exceed a configured resource limit (group
    /// enumeration bits, Gram matrix dimension).
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Operation not available for this kind of surface.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// An internal structural assumption was violated (e.g. a two-spin
    /// reduced matrix that should be diagonal is not).
    #[error("structural check failed: {0}")]
    Structural(String),

    /// Syntax error in a region spec, with the byte offset of the failure.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
