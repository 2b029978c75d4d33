use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no content of zero")]
    ZeroContent,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("order must be positive")]
    NonPositiveOrder,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("target not squarefree")]
    NotSquarefree,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
