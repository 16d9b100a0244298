use thiserror::Error;

use crate::filtration::{Interval, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown cell id {0}")]
    UnknownCell(usize),

    #[error("invalid filtration: {}", format_violations(.0))]
    InvalidFiltration(Vec<Violation>),

    #[error("chain is not a 1-cycle")]
    NotACycle,

    #[error("chain has dimension {found}, expected {expected}")]
    WrongDimension { expected: u8, found: u8 },

    #[error("chain support reaches cell {max}, beyond index {index}")]
    SupportExceedsIndex { max: usize, index: usize },

    #[error("index {index} is outside 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cell {0} is not a positive edge")]
    NotPositiveEdge(usize),

    #[error("interval {0} is not in the H1 barcode")]
    NotInBarcode(Interval),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("instance too large for brute force: {edges} edges exceeds limit {limit}")]
    InstanceTooLarge { edges: usize, limit: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("non-finite coordinate in point {0}")]
    NonFinite(usize),

    #[error("negative threshold {0}")]
    NegativeThreshold(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
