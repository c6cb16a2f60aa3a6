use thiserror::Error;

/// Errors raised when an operation's preconditions are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be nonzero")]
    Zero(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{r} is not coprime to {m}")]
    NotCoprime { r: i64, m: u64 },

    #[error("moduli {a} and {b} are not coprime; use crt_general")]
    NonCoprimeModuli { a: u64, b: u64 },

    #[error("{0} is not square-free")]
    NotSquareFree(u64),

    #[error("polynomial modulus is not monic")]
    NotMonic,

    #[error("operands use different moduli")]
    ModulusMismatch,

    #[error("value out of supported range: {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
