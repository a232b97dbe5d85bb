use num_bigint::BigUint;
use thiserror::Error;

/// Everything that can go wrong when ranking or unranking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("serial numbers are 1-based; 0 is not a serial")]
    ZeroSerial,

    #[error("serial {serial} is out of range [1, {count}]")]
    SerialOutOfRange { serial: BigUint, count: BigUint },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("offset entry d[{index}] = {value} exceeds its bound {bound}")]
    OffsetOutOfRange {
        index: usize,
        value: usize,
        bound: usize,
    },

    #[error("not a permutation of 1..={len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("composition parts sum to {actual}, expected {expected}")]
    CompositionSum { expected: usize, actual: usize },

    #[error("restricted growth violated at position {index}: block {value} exceeds {bound}")]
    RestrictedGrowth {
        index: usize,
        value: usize,
        bound: usize,
    },

    #[error("element {element} at position {index} is outside [1, {n}]")]
    ElementOutOfRange {
        index: usize,
        element: usize,
        n: usize,
    },

    #[error("elements are not strictly increasing at position {index}")]
    NotIncreasing { index: usize },

    #[error("subset size k = {k} exceeds ground set size n = {n}")]
    SizeExceedsGround { n: usize, k: usize },

    #[error("flag at position {index} is {value}, expected 0 or 1")]
    InvalidFlag { index: usize, value: usize },

    #[error("vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
