//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by fan validation, parsing, and the graded-algebra
/// operations. Mathematical *failures* (a verification that comes out
/// false) are not errors; they are reported in the relevant result structs.
#[derive(Debug, Error)]
pub enum CoxError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("fan is not complete and simplicial: {0}")]
    NotCompleteSimplicial(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial is not homogeneous: monomial {monomial} has class {found}, expected {expected}")]
    Inhomogeneous {
        monomial: String,
        found: String,
        expected: String,
    },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("divisor class is not effective: {0}")]
    NotEffective(String),

    #[error("graded piece in socle degree has dimension {actual}, expected 1")]
    SocleDimension { actual: usize },

    #[error("polynomial does not lie in the ideal: {0}")]
    NotInIdeal(String),

    #[error("class is not nef: {0}")]
    NotNef(String),

    #[error("class is not ample: {0}")]
    NotAmple(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, CoxError>;
