use std::path::PathBuf;

use ordlab_core::Error as CoreError;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const MALFORMED: i32 = 2;
    pub const LIMIT: i32 = 3;
    pub const COUNTEREXAMPLE: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("cannot read {path}: {source}", path = .path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}: invalid JSON: {source}")]
    Json {
        context: String,
        source: serde_json::Error,
    },
    #[error("{context}: {message}")]
    Malformed { context: String, message: String },
    #[error("{context}: {source}")]
    Core { context: String, source: CoreError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Generation(String),
}

impl LabError {
    pub fn malformed(context: impl Into<String>, message: impl Into<String>) -> Self {
        LabError::Malformed {
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn core(context: impl Into<String>, source: CoreError) -> Self {
        LabError::Core {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Read { .. } | LabError::Json { .. } | LabError::Malformed { .. } => {
                exit::MALFORMED
            }
            LabError::Core { source, .. } => match source {
                CoreError::LimitExceeded { .. } => exit::LIMIT,
                CoreError::NotCompleteHom | CoreError::NotSuperFilter | CoreError::NotATopology => {
                    exit::FAILURE
                }
                _ => exit::MALFORMED,
            },
            LabError::Usage(_) | LabError::Generation(_) => exit::FAILURE,
        }
    }
}

/// Attaches a context string to core results.
pub trait Context<T> {
    fn context(self, context: impl Into<String>) -> Result<T, LabError>;
}

impl<T> Context<T> for Result<T, CoreError> {
    fn context(self, context: impl Into<String>) -> Result<T, LabError> {
        self.map_err(|e| LabError::core(context, e))
    }
}

pub type LabResult<T> = Result<T, LabError>;
