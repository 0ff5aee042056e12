use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported field parameters: {0}")]
    UnsupportedField(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("p = {p} divides n = {n}")]
    NotCoprime { p: u64, n: u64 },
    #[error("element is not a unit")]
    NotUnit,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the code is zero; its minimum distance is undefined")]
    ZeroCode,
    #[error("enumeration of {count} codewords exceeds the limit {limit}")]
    ThresholdExceeded { count: u128, limit: u64 },
    #[error("invalid tower: {0}")]
    InvalidTower(String),
    #[error("code is not closed under {0}")]
    NotClosed(&'static str),
    #[error("invalid exponents: {0}")]
    InvalidExponents(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}
