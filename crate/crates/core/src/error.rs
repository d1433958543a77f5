use thiserror::Error;

/// Everything that can go wrong while building or evaluating rough-set structures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("universe has {0} elements; at most {max} are supported", max = crate::MAX_UNIVERSE)]
    UniverseTooLarge(usize),

    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element index {index} out of range for a universe of {len}")]
    ElementOutOfRange { index: usize, len: usize },

    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
