use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} is too large for a partial fraction expansion of order {order}")]
    DegreeTooHigh { degree: usize, order: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("n = {n} exceeds the configured limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("connected pair (c = {split}) with {chords} chords has {cycles} boundary cycles of the wrong parity")]
    ParityViolation {
        chords: usize,
        split: usize,
        cycles: usize,
    },

    #[error("series for genus {genus} does not truncate: coefficient of z^{power} is nonzero")]
    NotPolynomial { genus: usize, power: usize },

    #[error("exact division failed: {0}")]
    DivisionRemainder(String),

    #[error("expected integer coefficients: {0}")]
    NotIntegral(String),

    #[error("no closed form is available for genus {0}")]
    UnsupportedGenus(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
