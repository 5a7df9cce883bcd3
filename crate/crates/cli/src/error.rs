use std::fmt;

use kzrat_core::KzError;

/// Failure of a command, carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Core(KzError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Core(e) => match e {
                KzError::UnsolvableResonance { .. } => 3,
                KzError::DegenerateConfiguration(_) => 4,
                KzError::SingularMatrix
                | KzError::UnsupportedSpectrum(_)
                | KzError::NotNumeric
                | KzError::InvalidPath(_) => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<KzError> for CliError {
    fn from(e: KzError) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
