use std::fmt;

/// Failure of a command, carrying its process exit status.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input; exit status 2.
    Input(String),
    /// Well-formed input violating a mathematical precondition; exit status 3.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<nspairs::Error> for CliError {
    fn from(e: nspairs::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Math(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column()))
    }
}

pub type CliResult<T> = Result<T, CliError>;
