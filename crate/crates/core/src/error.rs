use thiserror::Error;

use crate::partition::Cell;

/// Failure to read a partition, word or fraction from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed term `{0}`")]
    Syntax(String),
    #[error("zero part in `{0}`")]
    ZeroPart(String),
    #[error("parts are not weakly decreasing at `{0}`")]
    NotMonotone(String),
    #[error("value `{0}` is outside the supported range")]
    OutOfRange(String),
    #[error("word contains a letter other than 0 or 1: `{0}`")]
    Letter(char),
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the partition is empty")]
    Empty,
    #[error("cell {0} is not in the partition")]
    CellOutside(Cell),
    #[error("partition {0} is not triangular")]
    NotTriangular(String),
    #[error("{0}")]
    Domain(String),
    #[error("input exceeds the guard: {0}")]
    Guard(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("memo table exceeded its cap of {0} entries")]
    MemoBudget(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
