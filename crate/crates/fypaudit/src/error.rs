//! Crate error type and exit-code mapping.

use std::path::PathBuf;

/// Errors surfaced by catalog generation, scenario execution, analysis and
/// the on-disk store.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration (zero topics, empty locale set, bad weights...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The candidate pool shrank below one batch; the scenario is too long
    /// for the catalog.
    #[error("candidate pool exhausted for user {user} (run {run}, batch {batch}): {left} candidates < 30")]
    PoolExhausted {
        user: String,
        run: usize,
        batch: usize,
        left: usize,
    },

    /// An audit-protocol violation, e.g. an event referencing a post the
    /// user was never served. These indicate bugs in the driving code, not
    /// in the platform.
    #[error("protocol violation: {0}")]
    Protocol(String),

    /// A file failed schema or magic-header validation.
    #[error("schema error in {path}: {message}")]
    Schema { path: PathBuf, message: String },

    /// Analysis input that is required but absent (no control data, empty
    /// store, unknown preset...).
    #[error("missing data: {0}")]
    MissingData(String),

    /// Mathematically undefined request (Jaccard of two empty sets, trend
    /// of a single x value).
    #[error("undefined: {0}")]
    Undefined(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for this error: 1 usage, 2 data. Exit code 3
    /// (unconverged / partial) is decided by command results, not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            _ => 2,
        }
    }
}
