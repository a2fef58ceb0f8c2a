use std::path::PathBuf;

use crate::algebra::ValidationReport;
use crate::dsl::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{op}: {operand} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        op: &'static str,
        operand: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(ValidationReport),

    #[error("unknown algebra `{0}` (expected abelian(n), so3, sl2, m7 or nc3)")]
    UnknownAlgebra(String),

    #[error("abelian(n) needs a positive integer n, got `{0}`")]
    BadDimension(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("variable `{0}` has no assigned vector")]
    MissingVariable(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{}: {report}", path.display())]
    InvalidFile {
        path: PathBuf,
        report: ValidationReport,
    },

    #[error("worker pool: {0}")]
    Pool(String),
}

pub(crate) fn check_dim(
    op: &'static str,
    operand: &'static str,
    expected: usize,
    found: usize,
) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            operand,
            expected,
            found,
        })
    }
}
