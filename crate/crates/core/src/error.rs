use thiserror::Error;

/// Errors shared by all lattice computations.
///
/// Arithmetic is fixed-width with mandatory overflow detection: any
/// operation that would wrap reports `Overflow` instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("integer overflow in exact computation")]
    Overflow,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("configuration has a zero column (column {0})")]
    ZeroColumn(usize),
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("configuration is not pointed; fibers may be infinite")]
    NotPointed,
    #[error("vector is not in the kernel lattice")]
    NotInKernel,
    #[error("kernel lattice is trivial; complexity is undefined")]
    EmptyKernel,
    #[error("table contains a pair of opposite rows")]
    OppositeRows,
    #[error("table row {0} is not plus or minus a column of the basis matrix")]
    UnknownRow(usize),
    #[error("fiber enumeration exceeded the limit of {limit} points")]
    Resource { limit: usize },
    #[error("pad target {target} is smaller than the table's {rows} rows")]
    PadTooSmall { rows: usize, target: usize },
    #[error("restriction level {level} must be smaller than the lifting order {order}")]
    BadRestriction { level: usize, order: usize },
    #[error("invalid model specification: {0}")]
    BadModel(String),
    #[error("circuit enumeration produced a non-minimal support; internal inconsistency")]
    Inconsistent,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
