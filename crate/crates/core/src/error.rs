use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto the CLI exit codes: `Parse`, `Contract` and
/// `Budget` are caller mistakes (exit 1), `Internal` means a constructive
/// algorithm produced something its own invariants reject (exit 3). An
/// `Internal` error carries a rendered trace of the state that triggered it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("internal invariant violated: {summary}\n--- trace ---\n{trace}")]
    Internal { summary: String, trace: String },
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn internal(summary: impl Into<String>, trace: impl Into<String>) -> Self {
        Error::Internal {
            summary: summary.into(),
            trace: trace.into(),
        }
    }

    /// True for errors that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
