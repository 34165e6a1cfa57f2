use thiserror::Error;

/// Errors surfaced by the library modules.
///
/// Variants carry enough context to be printed as-is by the CLI; callers
/// that need to branch on the failure class match on the variant.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("architecture failed shape validation: {0}")]
    InvalidArchitecture(String),

    #[error("empty expansion grid: {0}")]
    EmptyExpansionGrid(String),

    #[error("insufficient training data: {0}")]
    InsufficientData(String),

    #[error("no samples in inference window")]
    EmptyCaptureWindow,

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

impl CoreError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CoreError::InvalidArgument(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CoreError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        CoreError::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
