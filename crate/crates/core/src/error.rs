use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("power substitution needs a positive exponent, got {0}")]
    NonPositiveExponent(i64),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("monodromy is not a certified automorphism: {0}")]
    NotCertified(String),
    #[error("matrix for {0} is not invertible")]
    NotInvertible(String),
    #[error("homomorphism does not respect the mapping torus relations: {0}")]
    IllDefined(String),
    #[error("group enumeration exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
