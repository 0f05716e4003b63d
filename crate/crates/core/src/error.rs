use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KronError {
    #[error("negative part {0} in partition")]
    NegativePart(i64),
    #[error("operation requires a non-empty partition")]
    EmptyPartition,
    #[error("degree mismatch: {left} has degree {left_degree}, {right} has degree {right_degree}")]
    DegreeMismatch {
        left: Partition,
        left_degree: usize,
        right: Partition,
        right_degree: usize,
    },
    #[error("partition {lambda} has degree {actual}, expected {expected}")]
    BadDegree {
        lambda: Partition,
        expected: usize,
        actual: usize,
    },
    #[error("parameter k = {k} out of range: {reason}")]
    BadK { k: i64, reason: &'static str },
    #[error("parameter d = {d} out of range: {reason}")]
    BadD { d: i64, reason: &'static str },
    #[error("{0} is not a two-row shape with second row at least 2")]
    NotTwoRow(Partition),
    #[error("{0} is not a hook, one-row or one-column shape")]
    NotHook(Partition),
    #[error("height {0} not supported (expected 2, 3, 4 or 5)")]
    BadHeight(usize),
    #[error("denominator constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
    #[error("coefficient value r = {0} out of range (r >= 1 required)")]
    BadR(usize),
    #[error("shift vector has {0} entries (at most 4 allowed)")]
    ShiftTooLong(usize),
    #[error("shift vector {0:?} is not non-increasing")]
    ShiftNotPartition(Vec<usize>),
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("cache format error at line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error("cache integrity error: stored chi^{lambda}_{rho} = {stored}, computed {computed}")]
    Integrity {
        lambda: Partition,
        rho: Partition,
        stored: String,
        computed: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for KronError {
    fn from(e: std::io::Error) -> Self {
        KronError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, KronError>;
