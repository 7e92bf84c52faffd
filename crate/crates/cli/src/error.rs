use std::fmt;

use scrambling_core::Error;

/// Failures grouped by exit status.
#[derive(Debug)]
pub enum CliError {
    /// A validation or verification check failed.
    Validation(String),
    Config(String),
    Io(String),
    /// A numerically degenerate result, such as a vanishing distance.
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Config(_) => 2,
            CliError::Io(_) => 3,
            CliError::Degenerate(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "validation failed: {m}"),
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Degenerate(m) => write!(f, "numerical degeneracy: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { name, reason } => {
                CliError::Config(format!("--{}: {reason}", name.replace('_', "-")))
            }
            Error::TooFewQubits { .. } => CliError::Config(format!("--N: {e}")),
            Error::DegenerateDistance { .. } => CliError::Degenerate(e.to_string()),
            Error::Checkpoint(_) | Error::CheckpointFormat(_) => CliError::Io(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
