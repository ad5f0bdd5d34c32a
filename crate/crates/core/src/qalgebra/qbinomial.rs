use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::QRationalFunction;
use crate::poly::IntPolynomial;

/// `[n]_q = 1 + q + ... + q^{n-1}` for `n >= 0`.
pub fn q_integer_poly(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); n])
}

/// `[n]_q = (1 - q^n)/(1 - q)`; for negative `n` this is `-[|n|]_q / q^{|n|}`.
pub fn q_integer(n: i64) -> QRationalFunction {
    if n >= 0 {
        QRationalFunction::from_poly(q_integer_poly(n as usize))
    } else {
        let m = n.unsigned_abs() as usize;
        QRationalFunction::new(
            -q_integer_poly(m),
            IntPolynomial::monomial(BigInt::one(), m),
        )
    }
}

// Rows of the q-Pascal triangle kept in memory; larger rows use the product formula.
const PASCAL_ROWS: usize = 64;

fn pascal() -> &'static RwLock<Vec<Vec<IntPolynomial>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<IntPolynomial>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![IntPolynomial::one()]]))
}

fn pascal_entry(n: usize, k: usize) -> IntPolynomial {
    if let Some(row) = pascal().read().expect("q-binomial cache").get(n) {
        return row[k].clone();
    }
    let mut table = pascal().write().expect("q-binomial cache");
    while table.len() <= n {
        let prev = table.last().expect("nonempty");
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(IntPolynomial::one());
        for j in 1..m {
            // [m, j] = q^j [m-1, j] + [m-1, j-1]
            row.push(&prev[j].shift(j) + &prev[j - 1]);
        }
        row.push(IntPolynomial::one());
        table.push(row);
    }
    table[n][k].clone()
}

/// Gaussian binomial `[n choose k]_q` for `n >= 0`, as a polynomial.
pub fn q_binomial_poly(n: usize, k: usize) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    let k = k.min(n - k);
    if n < PASCAL_ROWS {
        return pascal_entry(n, k);
    }
    // [n, j] = [n, j-1] [n-j+1] / [j], exact at every step.
    let mut acc = IntPolynomial::one();
    for j in 1..=k {
        let num = &acc * &q_integer_poly(n - j + 1);
        let (quot, rem) = num
            .divrem_unit_leading(&q_integer_poly(j))
            .expect("monic divisor");
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    acc
}

/// Gaussian binomial for any integer upper argument.
pub fn q_binomial(n: i64, k: u64) -> QRationalFunction {
    let k = k as usize;
    if n >= 0 {
        return QRationalFunction::from_poly(q_binomial_poly(n as usize, k));
    }
    // [-m, k] = (-1)^k q^{-(km + k(k-1)/2)} [m+k-1, k]
    let m = n.unsigned_abs() as usize;
    let mut num = q_binomial_poly(m + k - 1, k);
    if k % 2 == 1 {
        num = -num;
    }
    let shift = k * m + k * (k.saturating_sub(1)) / 2;
    QRationalFunction::new(num, IntPolynomial::monomial(BigInt::one(), shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{binomial_i, rat};
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(3).as_polynomial(), Some(p(&[1, 1, 1])));
        assert!(q_integer(0).is_zero());
        let m1 = q_integer(-1);
        assert_eq!(m1.numerator(), &p(&[-1]));
        assert_eq!(m1.denominator(), &p(&[0, 1]));
    }

    #[test]
    fn negative_integer_matches_definition() {
        // (1 - q^n)/(1 - q) with q^n = 1/q^m
        for m in 1..8usize {
            let qm = IntPolynomial::monomial(BigInt::one(), m);
            let direct = QRationalFunction::new(&qm - &IntPolynomial::one(), qm.clone())
                .div(&QRationalFunction::from_poly(p(&[1, -1])));
            assert_eq!(q_integer(-(m as i64)), direct);
        }
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2).as_polynomial(), Some(p(&[1, 1, 2, 1, 1])));
        assert_eq!(q_binomial(7, 0).as_polynomial(), Some(p(&[1])));
        assert_eq!(q_binomial(2, 1).as_polynomial(), Some(p(&[1, 1])));
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn negative_upper_matches_product_formula() {
        for n in -6i64..0 {
            for k in 0..5u64 {
                let mut num = QRationalFunction::one();
                for j in 0..k as i64 {
                    num = num.mul(&q_integer(n - j));
                }
                let mut den = QRationalFunction::one();
                for j in 1..=k as i64 {
                    den = den.mul(&q_integer(j));
                }
                assert_eq!(q_binomial(n, k), num.div(&den), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_pascal_rule() {
        for n in 1..=30usize {
            for k in 1..=30usize {
                let lhs = q_binomial_poly(n, k);
                let rhs = &q_binomial_poly(n - 1, k).shift(k) + &q_binomial_poly(n - 1, k - 1);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn cached_and_product_paths_agree() {
        for n in [PASCAL_ROWS - 1, PASCAL_ROWS, PASCAL_ROWS + 3] {
            for k in [0usize, 1, 2, 5, 9] {
                let mut acc = IntPolynomial::one();
                for j in 1..=k {
                    let (q, r) = (&acc * &q_integer_poly(n - j + 1))
                        .divrem_unit_leading(&q_integer_poly(j))
                        .unwrap();
                    assert!(r.is_zero());
                    acc = q;
                }
                assert_eq!(q_binomial_poly(n, k), acc);
            }
        }
        // Pascal step across the cache boundary.
        let n = PASCAL_ROWS;
        assert_eq!(
            q_binomial_poly(n, 4),
            &q_binomial_poly(n - 1, 4).shift(4) + &q_binomial_poly(n - 1, 3)
        );
    }

    #[test]
    fn degenerates_to_binomials() {
        for n in -10i64..=40 {
            for k in 0..=12u64 {
                let v = q_binomial(n, k).eval(&rat(1)).unwrap();
                assert_eq!(v, rat(binomial_i(n, k)), "n={n} k={k}");
            }
            assert_eq!(q_integer(n).eval(&rat(1)).unwrap(), rat(n));
        }
    }

    proptest! {
        #[test]
        fn nonnegative_with_expected_degree(n in 0usize..80, k in 0usize..80) {
            prop_assume!(k <= n);
            let b = q_binomial_poly(n, k);
            prop_assert_eq!(b.degree(), Some(k * (n - k)));
            prop_assert!(b.coeffs().iter().all(|c| !c.is_negative()));
            prop_assert!(!b.coeff(0).is_zero());
        }
    }
}
