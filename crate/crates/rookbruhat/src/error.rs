use std::io;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] rookbruhat_core::Error),
    #[error("{path}:{line}: {source}")]
    Element {
        path: String,
        line: usize,
        source: rookbruhat_core::Error,
    },
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("{mode} verification does not support n = {n} (allowed 1..={max})")]
    UnsupportedMode { mode: &'static str, n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
