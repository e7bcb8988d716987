use thiserror::Error;

use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("values {0} and {1} lie in different cosets of the integers")]
    MixedCoset(Value, Value),
    #[error("segment base {b} exceeds its end {e}")]
    BaseAfterEnd { b: Value, e: Value },
    #[error("rank triangle is not realizable: multiplicity of [{i},{j}] would be {m}")]
    NegativeMultiplicity { i: Value, j: Value, m: i64 },
    #[error("operation requires a non-empty multisegment")]
    Empty,
    #[error("segment index {index} out of range for a multisegment of {len} segments")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("action needs two distinct indices, got {0} twice")]
    SameIndex(usize),
    #[error("{what} of {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("invalid bounds: {0}")]
    Bounds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
