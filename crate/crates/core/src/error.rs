use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("p = {p} exceeds the configured bound {bound}")]
    PrimeOutOfRange { p: u32, bound: u32 },
    #[error("element does not lie in the prime field")]
    NotInPrimeField,
    #[error("{0} is a quadratic non-residue")]
    NonResidue(u32),
    #[error("the Artin-Schreier parameter must be nonzero mod p")]
    ZeroArtinSchreier,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("elements belong to different characters")]
    CharacterMismatch,
    #[error("no block with this label")]
    InvalidBlockLabel,
    #[error("highest weight {0} is out of range")]
    WeightOutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
