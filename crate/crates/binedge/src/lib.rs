//! File formats, parallel drivers and the command line for `binedge-core`.

pub mod cli;
pub mod compute;
mod field;
pub mod format;
pub mod suite;
mod table;
pub mod text;

pub use field::FieldChoice;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] binedge_core::Error),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl CliError {
    /// Process exit status: 3 for exhausted resource caps, 1 for internal
    /// failures and 2 for everything caused by the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource() => 3,
            CliError::Core(binedge_core::Error::Invariant(_)) => 1,
            _ => 2,
        }
    }
}
