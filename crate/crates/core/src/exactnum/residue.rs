use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::primes::require_prime;
use crate::error::{Error, Result};

/// A value modulo a prime power, kept in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    value: BigInt,
    modulus: BigInt,
}

impl ResidueClass {
    /// Reduces `value` modulo `modulus`. The modulus must be positive; it is
    /// not re-checked for being a prime power here.
    pub fn new(value: &BigInt, modulus: &BigInt) -> Self {
        assert!(modulus > &BigInt::zero(), "modulus must be positive");
        ResidueClass {
            value: value.mod_floor(modulus),
            modulus: modulus.clone(),
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Congruence of two residues with the same modulus.
    pub fn congruent(&self, other: &ResidueClass) -> bool {
        debug_assert_eq!(self.modulus, other.modulus);
        self.value == other.value
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Reduces `r = a/b` modulo `p^e` as `a * b^{-1}`.
///
/// Fails with [`Error::DenominatorNotInvertible`] when `p | b`.
pub fn residue_of_rational(r: &BigRational, p: &BigInt, e: u32) -> Result<ResidueClass> {
    require_prime(p)?;
    if e == 0 {
        return Err(Error::Precondition("exponent must be at least 1".into()));
    }
    residue_mod(r, p, e)
}

/// [`residue_of_rational`] without the primality check, for callers that
/// reduce modulo `n^e` with composite `n` (where invertibility of the
/// denominator modulo `n` is the only requirement).
pub(crate) fn residue_mod(r: &BigRational, p: &BigInt, e: u32) -> Result<ResidueClass> {
    let modulus: BigInt = Pow::pow(p, e);
    let inv = mod_inverse(r.denom(), &modulus).ok_or_else(|| Error::DenominatorNotInvertible {
        denominator: r.denom().clone(),
        prime: p.clone(),
        exponent: e,
    })?;
    Ok(ResidueClass::new(&(r.numer() * inv), &modulus))
}
