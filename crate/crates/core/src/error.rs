use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("possibly infinite-dimensional: no empty length level below the cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("field extension required: {0}")]
    FieldExtensionRequired(String),

    #[error("pipeline failure: {0}")]
    Pipeline(String),

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_)
            | Error::Syntax { .. }
            | Error::Validation(_)
            | Error::Precondition(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
