//! Exact scalars and the elementary number theory the checkers lean on.

mod bernoulli;
mod binomial;
mod primes;
pub(crate) mod residue;
mod twosquare;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use bernoulli::{bernoulli_number, bernoulli_poly_eval};
pub use binomial::{
    binomial, binomial_i, catalan, central_binomial, central_binomial_over_2k_minus_1, BinomialRow,
};
pub(crate) use primes::require_prime;
pub use primes::{is_prime, legendre_symbol, odd_primes_below, primes_below};
pub use residue::{residue_of_rational, ResidueClass};
pub use twosquare::{two_square_decompose, TwoSquareDecomposition};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `num / den`, reduced.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// `(-1)^e` as an integer.
pub fn sign_pow(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}
