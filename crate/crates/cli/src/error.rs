use std::fmt;

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or an invalid polytope / dosp type.
    Invalid(String),
    /// Two h* methods returned different vectors.
    Disagreement(String),
    /// A verification suite failed.
    Verification,
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) | CliError::Verification => 1,
            CliError::Disagreement(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "error: {msg}"),
            CliError::Disagreement(msg) => write!(f, "error: methods disagree: {msg}"),
            CliError::Verification => write!(f, "error: verification failed"),
            CliError::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
