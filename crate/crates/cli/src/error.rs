use thiserror::Error;

/// Errors with their exit codes: 1 for structures that fail, 2 for usage,
/// input and parse problems.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn parse(line: Option<usize>, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            CliError::Parse { line, .. } => *line,
            _ => None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
