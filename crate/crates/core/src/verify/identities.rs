//! Exact identity checkers: polynomial identities in `x` and closed forms
//! for products of binomial coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::CheckResult;
use crate::error::Error;
use crate::exactnum::{binomial_i, central_binomial, rat};
use crate::poly::RationalPolynomial;
use crate::sequences::r_poly;

/// `sum_{k<=n} ((16-x)k^2 - 4) C(2k,k)^2/(2k-1) x^(n-k)` equals the
/// constant `4(n+1)^2/(2n+1) C(2n+1,n)^2`, as polynomials in `x`.
pub fn check_lemma22(n: u64) -> CheckResult {
    let len = n as usize + 2;
    let mut lhs = vec![BigRational::zero(); len];
    for k in 0..=n {
        let c = central_binomial(k);
        let ck = BigRational::new(&c * &c, BigInt::from(2 * k as i64 - 1));
        let k2 = rat(k * k);
        let deg = (n - k) as usize;
        lhs[deg] += (rat(16) * &k2 - rat(4)) * &ck;
        lhs[deg + 1] -= k2 * ck;
    }
    let b = binomial_i(2 * n as i64 + 1, n);
    let rhs = BigRational::new(
        BigInt::from(4 * (n + 1) * (n + 1)) * &b * &b,
        BigInt::from(2 * n + 1),
    );
    CheckResult::new("lemma22").param("n", n).equal_poly(
        &RationalPolynomial::new(lhs),
        &RationalPolynomial::new(vec![rhs]),
    )
}

/// `(-1)^k C(n,k) C(-n,k) / C(2k-1,k) = 2n/(n+k) C(n+k,2k) = C(n+k,2k) + C(n+k-1,2k)`.
pub fn check_lemma23(n: u64, k: u64) -> CheckResult {
    let base = CheckResult::new("lemma23").param("n", n).param("k", k);
    if k == 0 {
        return base.ill_posed(Error::Precondition("need k >= 1".into()));
    }
    let (ni, ki) = (n as i64, k as i64);
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let left = BigRational::new(
        BigInt::from(sign) * binomial_i(ni, k) * binomial_i(-ni, k),
        binomial_i(2 * ki - 1, k),
    );
    let middle = BigRational::new(
        BigInt::from(2 * n) * binomial_i(ni + ki, 2 * k),
        BigInt::from(n + k),
    );
    let right = rat(binomial_i(ni + ki, 2 * k) + binomial_i(ni + ki - 1, 2 * k));
    let first = base
        .clone()
        .param("claim", "left = middle")
        .equal(&left, &middle);
    let second = base.param("claim", "middle = right").equal(&middle, &right);
    super::combine("lemma23", &["claim"], vec![first, second])
}

/// `(3/n) sum_{k<n} (2k+1) R_k(x)` equals
/// `sum_{k<n} (n-k) C(n+k,2k) C(2k,k) (2/(2k-1) - 1/(k+1)) x^k`, and the
/// latter has integer coefficients.
pub fn check_remark52(n: u64) -> CheckResult {
    let base = CheckResult::new("remark52").param("n", n);
    if n == 0 {
        return base.ill_posed(Error::Precondition("need n >= 1".into()));
    }
    let mut lhs = vec![BigRational::zero(); n as usize];
    for k in 0..n {
        let w = rat(2 * k + 1);
        for (i, c) in r_poly(k).coeffs().iter().enumerate() {
            lhs[i] += &w * rat(c.clone());
        }
    }
    let scale = BigRational::new(BigInt::from(3), BigInt::from(n));
    let lhs = RationalPolynomial::new(lhs.into_iter().map(|c| c * &scale).collect());
    let rhs = RationalPolynomial::new(
        (0..n)
            .map(|k| {
                let ki = k as i64;
                let w = BigRational::new(BigInt::from(2), BigInt::from(2 * ki - 1))
                    - BigRational::new(BigInt::from(1), BigInt::from(ki + 1));
                rat(BigInt::from(n - k) * binomial_i((n + k) as i64, 2 * k) * central_binomial(k))
                    * w
            })
            .collect(),
    );
    let out = base.equal_poly(&lhs, &rhs);
    if out.passed() && rhs.to_integer().is_none() {
        return out.fail("right-hand side has a non-integer coefficient");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma22_examples() {
        let r = check_lemma22(0);
        assert!(r.passed());
        assert_eq!(r.rhs, "[4]");
        for n in 0..=20 {
            assert!(check_lemma22(n).passed(), "n={n}");
        }
    }

    #[test]
    fn lemma23_examples() {
        let r = check_lemma23(2, 1);
        assert!(r.passed());
        assert_eq!(r.lhs, "4");
        assert!(check_lemma23(0, 1).passed());
        assert!(check_lemma23(5, 3).passed());
        for n in 0..30 {
            for k in 1..20 {
                assert!(check_lemma23(n, k).passed(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn remark52_examples() {
        let r = check_remark52(1);
        assert!(r.passed());
        assert_eq!(r.lhs, "[-3]");
        assert!(check_remark52(2).passed());
        assert!(check_remark52(25).passed());
    }
}
