use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} = {got} is below the required minimum {min}")]
    Precondition {
        what: &'static str,
        got: i64,
        min: i64,
    },

    #[error("index {index} out of range 1..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("{what} = {got} exceeds the supported cap of {cap}: {reason}")]
    Infeasible {
        what: &'static str,
        got: usize,
        cap: usize,
        reason: &'static str,
    },

    #[error("graph has no edges")]
    Edgeless,

    #[error("cochain is a coboundary")]
    Coboundary,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("arithmetic overflow in exact rational computation")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
