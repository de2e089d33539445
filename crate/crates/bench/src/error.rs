use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{context}: {source}")]
    Solver {
        context: String,
        #[source]
        source: urel_core::Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("malformed file: {0}")]
    Format(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("no benchmark case {id} in dimension {d}")]
    UnknownCase { id: u32, d: u32 },
    #[error("{0}")]
    Unsupported(String),
    #[error("profiles do not overlap: {0}")]
    Domain(String),
    #[error("record too thin to locate the focus: {0}")]
    InsufficientRecord(String),
}

impl BenchError {
    pub(crate) fn solver(context: impl Into<String>) -> impl FnOnce(urel_core::Error) -> Self {
        let context = context.into();
        move |source| BenchError::Solver { context, source }
    }

    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Self {
        let path = path.into();
        move |source| BenchError::Io { path, source }
    }

    /// True for failures raised inside a numerical solver.
    pub fn is_solver_error(&self) -> bool {
        matches!(self, BenchError::Solver { .. })
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;
