//! Game interchange, generators, JSON reports and the benchmark harness.

use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::game::GameError;
use crate::solvers::SolveError;

pub mod bench;
pub mod generate;
pub mod pgsolver;
pub mod report;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid game: {0}")]
    Validation(#[from] GameError),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid report: {0}")]
    InvalidReport(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Replaces `path` with `contents` through a temporary file in the same
/// directory, so readers never observe a partial write.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), IoError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| IoError::Io(e.error))?;
    Ok(())
}
