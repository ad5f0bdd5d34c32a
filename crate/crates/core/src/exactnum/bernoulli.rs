use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::binomial::BinomialRow;

// Grows on demand; entries never change once written.
static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// Bernoulli number `B_m` with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_number(m: usize) -> BigRational {
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut table = cache.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= m {
        let n = table.len();
        let next = if n > 1 && n % 2 == 1 {
            BigRational::zero()
        } else {
            let mut acc = BigRational::zero();
            for (j, c) in BinomialRow::new(n as u64 + 1).take(n).enumerate() {
                if !table[j].is_zero() {
                    acc += &table[j] * BigRational::from_integer(c);
                }
            }
            -acc / BigRational::from_integer(BigInt::from(n + 1))
        };
        table.push(next);
    }
    table[m].clone()
}

/// `B_m(x) = sum_k C(m, k) B_k x^(m-k)`.
pub fn bernoulli_poly_eval(m: usize, x: &BigRational) -> BigRational {
    bernoulli_number(m);
    let mut acc = BigRational::zero();
    let mut xpow = BigRational::one();
    // Accumulate from the top index down so the power of x grows with the loop.
    let coeffs: Vec<BigInt> = BinomialRow::new(m as u64).take(m + 1).collect();
    for k in (0..=m).rev() {
        let b = bernoulli_number(k);
        if !b.is_zero() {
            acc += b * BigRational::from_integer(coeffs[k].clone()) * &xpow;
        }
        xpow *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    /// Akiyama–Tanigawa; yields the `B_1 = +1/2` convention.
    fn akiyama_tanigawa(n: usize) -> Vec<BigRational> {
        let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
        let mut out = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(ratio(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
            }
            out.push(a[0].clone());
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(bernoulli_number(0), ratio(1, 1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
        assert_eq!(bernoulli_poly_eval(1, &ratio(1, 3)), ratio(-1, 6));
        assert_eq!(bernoulli_poly_eval(0, &ratio(7, 2)), ratio(1, 1));
        assert_eq!(bernoulli_poly_eval(2, &ratio(0, 1)), ratio(1, 6));
    }

    #[test]
    fn matches_independent_route() {
        let reference = akiyama_tanigawa(60);
        for (m, b) in reference.into_iter().enumerate() {
            let expected = if m == 1 { -b } else { b };
            assert_eq!(bernoulli_number(m), expected, "m={m}");
        }
    }

    #[test]
    fn staudt_clausen_integrality() {
        let mut fact = BigInt::one();
        for m in 0..=60usize {
            fact *= m + 1;
            let v = bernoulli_number(m) * BigRational::from_integer(fact.clone());
            assert!(v.is_integer(), "m={m}");
        }
    }

    #[test]
    fn polynomial_reflection() {
        // B_m(1 - x) = (-1)^m B_m(x)
        let x = ratio(2, 7);
        let y = ratio(5, 7);
        for m in 0..25usize {
            let lhs = bernoulli_poly_eval(m, &y);
            let rhs = bernoulli_poly_eval(m, &x);
            let rhs = if m % 2 == 0 { rhs } else { -rhs };
            assert_eq!(lhs, rhs, "m={m}");
        }
    }
}
