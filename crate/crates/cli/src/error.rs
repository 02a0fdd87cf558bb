use std::fmt;
use std::process::ExitCode;

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input files.
    Usage(String),
    /// A numerical routine failed on otherwise valid input.
    Numerical(ergoflow::Error),
    /// A regression row or property check failed.
    Check(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            Self::Check(_) => ExitCode::from(1),
            Self::Usage(_) => ExitCode::from(2),
            Self::Numerical(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error: {m}"),
            Self::Numerical(e) => write!(f, "numerical error: {e}"),
            Self::Check(m) => write!(f, "{m}"),
        }
    }
}

impl From<ergoflow::Error> for CliError {
    fn from(e: ergoflow::Error) -> Self {
        Self::Numerical(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
