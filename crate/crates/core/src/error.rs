use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("degree {degree} exceeds rank {rank}")]
    StableRange { degree: usize, rank: usize },
    #[error("length {len} exceeds rank {rank}")]
    LengthOverflow { len: usize, rank: usize },
    #[error("nonzero remainder in exact division by the Vandermonde product")]
    NonzeroRemainder,
    #[error("unpaired Gamma factor: {0}")]
    UnpairedGamma(String),
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cap exceeded: {0}")]
    Cap(String),
}
