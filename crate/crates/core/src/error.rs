use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("{0} is not congruent to 1 modulo 4")]
    NotOneModFour(BigInt),
    #[error("denominator {denominator} is not invertible modulo {prime}^{exponent}")]
    DenominatorNotInvertible {
        denominator: BigInt,
        prime: BigInt,
        exponent: u32,
    },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("kernel {kernel} violates its hypothesis at k = {k}: {reason}")]
    KernelViolation {
        kernel: String,
        k: u64,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
