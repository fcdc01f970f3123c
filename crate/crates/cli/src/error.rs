use std::path::Path;

use gamma_core::GammaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, unwritable or malformed file.
    #[error("{0}")]
    File(String),
    /// Bad arguments or input sizes.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CountMismatch(String),
    /// Singular preconditioner or oracle disagreement.
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    NotConverged(String),
}

impl CliError {
    pub fn file(path: &Path, e: std::io::Error) -> Self {
        CliError::File(format!("{}: {e}", path.display()))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::File(_) => 1,
            CliError::Usage(_) => 2,
            CliError::CountMismatch(_) => 3,
            CliError::Numerical(_) => 4,
            CliError::NotConverged(_) => 5,
        }
    }
}

impl From<GammaError> for CliError {
    fn from(e: GammaError) -> Self {
        match e {
            GammaError::Singular { .. }
            | GammaError::PreconditionerNotPositive { .. }
            | GammaError::FormulaDiscrepancy { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
