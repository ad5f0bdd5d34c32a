use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `p < bound`, ascending.
pub fn primes_below(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    if bound < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; bound];
    let mut out = Vec::new();
    for i in 2..bound {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j < bound {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub fn odd_primes_below(bound: u64) -> Vec<u64> {
    primes_below(bound)
        .into_iter()
        .filter(|&p| p != 2)
        .collect()
}

fn as_prime(p: &BigInt) -> Option<u64> {
    p.to_u64().filter(|&v| is_prime(v))
}

/// Legendre symbol `(a / p)` by Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> Result<i32> {
    let pv = match as_prime(p) {
        Some(v) if v != 2 => v,
        _ => return Err(Error::NotOddPrime(p.clone())),
    };
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(0);
    }
    let e = BigInt::from((pv - 1) / 2);
    let r = a.modpow(&e, p);
    Ok(if r.is_one() { 1 } else { -1 })
}

pub(crate) fn require_prime(p: &BigInt) -> Result<u64> {
    if p.is_negative() {
        return Err(Error::NotPrime(p.clone()));
    }
    as_prime(p).ok_or_else(|| Error::NotPrime(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn leg(a: i64, p: i64) -> i32 {
        legendre_symbol(&BigInt::from(a), &BigInt::from(p)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(leg(2, 7), 1);
        assert_eq!(leg(-1, 3), -1);
        assert_eq!(leg(5, 5), 0);
    }

    #[test]
    fn rejects_non_odd_primes() {
        assert!(legendre_symbol(&BigInt::from(3), &BigInt::from(9)).is_err());
        assert!(legendre_symbol(&BigInt::from(3), &BigInt::from(2)).is_err());
        assert!(legendre_symbol(&BigInt::from(3), &BigInt::from(-7)).is_err());
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieve = primes_below(5000);
        let trial: Vec<u64> = (0..5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, trial);
    }

    #[test]
    fn quadratic_residues_by_enumeration() {
        for p in odd_primes_below(200) {
            let squares: Vec<u64> = (1..p).map(|t| t * t % p).collect();
            for a in 1..p {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(leg(a as i64, p as i64), expected);
            }
        }
    }

    proptest! {
        #[test]
        fn multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000, idx in 0usize..94) {
            let primes = odd_primes_below(500);
            let p = primes[idx % primes.len()] as i64;
            prop_assert_eq!(leg(a * b, p), leg(a, p) * leg(b, p));
        }
    }
}
