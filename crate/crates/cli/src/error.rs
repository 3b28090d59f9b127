//! Command line errors and their exit codes.

use liehess::LieError;
use thiserror::Error;

/// Failure of a command line run.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, configuration file or names; nothing was computed.
    #[error("configuration error: {0}")]
    Config(String),

    /// A computation failed after the inputs were accepted.
    #[error("computation error: {0}")]
    Compute(#[from] LieError),

    /// The output could not be written.
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: 2 for configuration, 3 for computation, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    /// Wraps a library error raised while validating inputs.
    pub fn config(e: LieError) -> Self {
        CliError::Config(e.to_string())
    }
}
