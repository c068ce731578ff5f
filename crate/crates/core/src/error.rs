use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rank deficient design (condition ratio {ratio:.3e} at degree {l_max})")]
    RankDeficient { l_max: usize, ratio: f64 },

    #[error("coefficients violate Hermitian symmetry at (l={l}, m={m}, t={t})")]
    SymmetryViolation { l: usize, m: i64, t: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("format error in {location}: {message}")]
    Format { location: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
