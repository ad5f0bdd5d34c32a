//! Exact arithmetic, sequence generators and congruence checkers for the
//! binomial sums `R_n = sum C(n,k) C(n+k,k) / (2k-1)` and
//! `S_n = sum C(n,k)^2 C(2k,k) (2k+1)`, their polynomial and q-analogues,
//! and the summation framework built around them.
//!
//! Every check evaluates its sums exactly (big integers and rationals) and
//! only then reduces modulo the relevant modulus, so an ill-posed congruence
//! (a denominator divisible by the modulus prime) surfaces as an error
//! instead of a silently wrong residue.

pub mod error;
pub mod exactnum;
pub mod poly;
pub mod qalgebra;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational, ResidueClass, TwoSquareDecomposition};
pub use poly::{IntPolynomial, RationalPolynomial};
pub use verify::{CheckResult, Status};
