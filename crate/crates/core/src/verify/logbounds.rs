//! Rigorous enclosures of natural logarithms of big integers, and the sign
//! of integer combinations of such logarithms.
//!
//! Values are fixed point with `bits` fractional bits. `ln N` uses
//! `N = 2^e (1+t)` and `ln(1+t) = 2 atanh(t/(2+t))`; the series is summed
//! with floor rounding and the accumulated rounding error and the tail are
//! added to get the upper end.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

/// `[lo, hi] * 2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

/// Bounds on `2 atanh(num/den)` for `0 <= num/den <= 1/3`, scaled by `2^bits`.
fn two_atanh(num: &BigInt, den: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let z = (num << bits) / den;
    let z2 = (&z * &z) >> bits;
    let mut power = z;
    let mut sum = BigInt::zero();
    let mut terms: u64 = 0;
    while !power.is_zero() {
        sum += &power / (2 * terms + 1);
        power = (&power * &z2) >> bits;
        terms += 1;
    }
    // Each power is low by at most 2 units per step taken; each division
    // loses one more unit. Once the power floors to zero the true tail is
    // below 2^-bits * (terms + 1) * 9/8, covered by the +2 (terms + 1).
    let err = BigInt::from((terms + 2) * (terms + 2) * 2 + 2 * (terms + 1) + 4);
    debug_assert!(sum < one);
    (&sum * 2, (sum + err) * 2)
}

fn ln2(bits: u32) -> (BigInt, BigInt) {
    two_atanh(&BigInt::one(), &BigInt::from(3), bits)
}

/// Enclosure of `ln n` for `n >= 1`.
pub fn ln_interval(n: &BigInt, bits: u32) -> LogInterval {
    assert!(n.sign() == Sign::Plus, "logarithm of a nonpositive integer");
    let e = n.bits() - 1;
    let base = BigInt::one() << e;
    let (lo, hi) = two_atanh(&(n - &base), &(n + &base), bits);
    let (l2lo, l2hi) = ln2(bits);
    LogInterval {
        lo: lo + &l2lo * e,
        hi: hi + &l2hi * e,
        bits,
    }
}

/// Sign of `sum c_i ln v_i` for positive integers `v_i`, refining the
/// precision until the enclosure excludes zero. `None` if it still
/// straddles zero at `max_bits`.
pub fn log_combination_sign(terms: &[(BigInt, &BigInt)], max_bits: u32) -> Option<Ordering> {
    let mut bits = 64;
    loop {
        let (lo, hi) = combination_bounds(terms, bits);
        if hi.is_negative() {
            return Some(Ordering::Less);
        }
        if lo.is_positive() {
            return Some(Ordering::Greater);
        }
        if lo.is_zero() && hi.is_zero() {
            return Some(Ordering::Equal);
        }
        if bits >= max_bits {
            return None;
        }
        bits *= 2;
    }
}

/// Enclosure `[lo, hi] * 2^-bits` of `sum c_i ln v_i`.
pub fn combination_bounds(terms: &[(BigInt, &BigInt)], bits: u32) -> (BigInt, BigInt) {
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        if v.is_one() {
            continue;
        }
        let iv = ln_interval(v, bits);
        if c.is_positive() {
            lo += c * &iv.lo;
            hi += c * &iv.hi;
        } else {
            lo += c * &iv.hi;
            hi += c * &iv.lo;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn to_f64(v: &BigInt, bits: u32) -> f64 {
        let s: f64 = v.to_string().parse().unwrap();
        s / 2f64.powi(bits as i32)
    }

    #[test]
    fn encloses_small_logs() {
        for n in 1u64..2000 {
            let iv = ln_interval(&BigInt::from(n), 64);
            let exact = (n as f64).ln();
            assert!(to_f64(&iv.lo, 64) <= exact + 1e-12, "n={n}");
            assert!(to_f64(&iv.hi, 64) >= exact - 1e-12, "n={n}");
            assert!(&iv.hi - &iv.lo < BigInt::from(1u64 << 20));
        }
    }

    #[test]
    fn powers_of_two_and_exact_relations() {
        let two = BigInt::from(2);
        let big = BigInt::one() << 3000u32;
        let terms = [(BigInt::from(1), &big), (BigInt::from(-3000), &two)];
        let (lo, hi) = combination_bounds(&terms, 128);
        assert!(lo <= BigInt::zero() && hi >= BigInt::zero());
        // 3^5 = 243 > 2^7 = 128
        let three = BigInt::from(3);
        let t = [(BigInt::from(5), &three), (BigInt::from(-7), &two)];
        assert_eq!(log_combination_sign(&t, 512), Some(Ordering::Greater));
    }

    proptest! {
        #[test]
        fn sign_agrees_with_exact_powers(a in 2u64..5000, b in 2u64..5000, x in 1u32..40, y in 1u32..40) {
            let (ab, bb) = (BigInt::from(a), BigInt::from(b));
            let lhs = num_traits::pow(ab.clone(), x as usize);
            let rhs = num_traits::pow(bb.clone(), y as usize);
            let terms = [(BigInt::from(x), &ab), (-BigInt::from(y), &bb)];
            let got = log_combination_sign(&terms, 1024);
            if lhs == rhs {
                prop_assert!(got.is_none() || got == Some(Ordering::Equal));
            } else {
                prop_assert_eq!(got, Some(lhs.cmp(&rhs)));
            }
        }
    }
}
