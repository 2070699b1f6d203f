use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("{0}")]
    Domain(String),

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
