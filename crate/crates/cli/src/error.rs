use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, field `{field}`: {reason}")]
    Parse { line: usize, field: String, reason: String },

    #[error("missing required field `{0}`")]
    Missing(&'static str),

    #[error("field `{field}`: {reason}")]
    Invalid { field: String, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Engine(#[from] toric_cartier::Error),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub(crate) fn parse(line: usize, field: &str, reason: &str) -> Self {
        CliError::Parse {
            line,
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn invalid(field: &str, err: toric_cartier::Error) -> Self {
        CliError::Invalid {
            field: field.into(),
            reason: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
