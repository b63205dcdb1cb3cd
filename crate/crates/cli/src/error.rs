use pwt_core::{FptasError, GenerateError, HardnessError, ModelError, ParseError};

/// Failures reported by the command line. The variant decides the exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or flag values; exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or invalid input data; exit code 2.
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        CliError::Input(format!("{}: {err}", path.display()))
    }
}

impl From<ParseError> for CliError {
    fn from(err: ParseError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<GenerateError> for CliError {
    fn from(err: GenerateError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<HardnessError> for CliError {
    fn from(err: HardnessError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<FptasError> for CliError {
    fn from(err: FptasError) -> Self {
        match err {
            FptasError::Epsilon(_) => CliError::Usage(err.to_string()),
            FptasError::Model(e) => e.into(),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Input(format!("csv: {err}"))
    }
}
