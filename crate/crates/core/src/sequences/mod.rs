//! Generators for the integer sequences and polynomial families, each by
//! direct summation, plus exact checks of their holonomic recurrences.
//!
//! Generators never use a recurrence internally, so a recurrence check is a
//! genuine cross-check of the summation code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::BinomialRow;
use crate::verify::{render_poly, CheckResult};

pub use crate::poly::{IntPolynomial, RationalPolynomial};

/// `C(n,k) C(n+k,k)` for `k = 0..=n`, by the ratio
/// `(n-k)(n+k+1) / (k+1)^2` between neighbours.
pub fn delannoy_like_terms(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut a = BigInt::one();
    for k in 0..=n {
        out.push(a.clone());
        if k < n {
            a *= (n - k) * (n + k + 1);
            a /= (k + 1) * (k + 1);
        }
    }
    out
}

/// `C(n,k)^2` for `k = 0..=n`.
fn squared_row(n: u64) -> Vec<BigInt> {
    BinomialRow::new(n)
        .take(n as usize + 1)
        .map(|c| &c * &c)
        .collect()
}

/// `C(2k,k)` for `k = 0..=n`.
pub fn central_binomials(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        out.push(c.clone());
        c *= 2 * (2 * k + 1);
        c /= k + 1;
    }
    out
}

/// `C(2k,k) / (2k-1)` for `k = 0..=n`.
pub fn central_over_odd(n: u64) -> Vec<BigInt> {
    central_binomials(n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| odd_div(&c, k as u64))
        .collect()
}

fn odd_div(a: &BigInt, k: u64) -> BigInt {
    let d = 2 * k as i64 - 1;
    debug_assert!((a % d).is_zero());
    a / d
}

/// Coefficients of `R_n(x) = sum_k C(n,k) C(n+k,k) x^k / (2k-1)`.
pub fn r_poly(n: u64) -> IntPolynomial {
    IntPolynomial::new(
        delannoy_like_terms(n)
            .iter()
            .enumerate()
            .map(|(k, a)| odd_div(a, k as u64))
            .collect(),
    )
}

/// `R_n = R_n(1)`.
pub fn r_number(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .iter()
        .enumerate()
        .map(|(k, a)| odd_div(a, k as u64))
        .sum()
}

/// Coefficients of `S_n(x) = sum_k C(n,k)^2 C(2k,k) (2k+1) x^k`.
pub fn s_poly(n: u64) -> IntPolynomial {
    let cb = central_binomials(n);
    IntPolynomial::new(
        squared_row(n)
            .into_iter()
            .zip(cb)
            .enumerate()
            .map(|(k, (b2, c))| b2 * c * (2 * k + 1))
            .collect(),
    )
}

pub fn s_number(n: u64) -> BigInt {
    s_poly(n).coeffs().iter().sum()
}

/// Large Schröder number `sum_k C(n,k) C(n+k,k) / (k+1)`.
pub fn schroder(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .into_iter()
        .enumerate()
        .map(|(k, a)| a / (k + 1))
        .sum()
}

/// `h_n = sum_k C(n,k)^2 C_k`.
pub fn h_number(n: u64) -> BigInt {
    squared_row(n)
        .into_iter()
        .zip(central_binomials(n))
        .enumerate()
        .map(|(k, (b2, c))| b2 * (c / (k + 1)))
        .sum()
}

/// `sum_{k=0}^{N} c_k / m^k` as one fraction over `m^N`.
pub fn power_denominator_sum(coeffs: &[BigInt], m: &BigInt) -> BigRational {
    assert!(!m.is_zero(), "base must be nonzero");
    let mut num = BigInt::zero();
    for c in coeffs {
        num = num * m + c;
    }
    let n = coeffs.len().saturating_sub(1);
    BigRational::new(num, num_traits::pow(m.clone(), n))
}

/// `sum_{k=0}^{n} C(2k,k) C(2k,k+d) / ((2k-1) m^k)`.
pub fn ratio_sum(n: u64, d: u64, m: &BigInt) -> BigRational {
    power_denominator_sum(&ratio_sum_coeffs(n, d), m)
}

/// `C(2k,k) C(2k,k+d) / (2k-1)` for `k = 0..=n`.
fn ratio_sum_coeffs(n: u64, d: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    // C(2k, k+d) vanishes below k = d and equals 1 at k = d.
    let mut upper = BigInt::zero();
    for (k, c) in central_over_odd(n).into_iter().enumerate() {
        let k = k as u64;
        if k == d {
            upper = BigInt::one();
        } else if k > d {
            upper *= (2 * k - 1) * (2 * k);
            upper /= (k + d) * (k - d);
        }
        out.push(c * &upper);
    }
    out
}

/// `R_0, ..., R_n`.
pub fn r_numbers(n: u64) -> Vec<BigInt> {
    use rayon::prelude::*;
    (0..=n).into_par_iter().map(r_number).collect()
}

/// `S_0, ..., S_n`.
pub fn s_numbers(n: u64) -> Vec<BigInt> {
    use rayon::prelude::*;
    (0..=n).into_par_iter().map(s_number).collect()
}

/// `t_n = sum_k C(n,k)^2 C(n+k,k)^2 / (2k-1)`.
pub fn t_small(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .iter()
        .enumerate()
        .map(|(k, a)| odd_div(a, k as u64) * a)
        .sum()
}

/// `T_n = sum_k C(n,k)^2 C(n+k,k)^2 (2k+1)`.
pub fn t_big(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .iter()
        .enumerate()
        .map(|(k, a)| a * a * (2 * k + 1))
        .sum()
}

/// `T_n^+ = sum_k (2k+1)^2 C(n,k)^2 C(n+k,k)^2`.
pub fn t_plus(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .iter()
        .enumerate()
        .map(|(k, a)| a * a * ((2 * k + 1) * (2 * k + 1)))
        .sum()
}

/// `T_n^- = sum_k (-1)^k (2k+1)^2 C(n,k)^2 C(n+k,k)^2`.
pub fn t_minus(n: u64) -> BigInt {
    delannoy_like_terms(n)
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let v = a * a * ((2 * k + 1) * (2 * k + 1));
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum()
}

/// `s_n = sum_k C(n,k)^2 C(2k,k) / (2k-1)`.
pub fn s_small(n: u64) -> BigInt {
    squared_row(n)
        .into_iter()
        .zip(central_over_odd(n))
        .map(|(b2, c)| b2 * c)
        .sum()
}

fn s_square_weighted(n: u64, alternate: bool) -> BigInt {
    squared_row(n)
        .into_iter()
        .zip(central_binomials(n))
        .enumerate()
        .map(|(k, (b2, c))| {
            let v = b2 * c * ((2 * k + 1) * (2 * k + 1));
            if alternate && k % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .sum()
}

/// `S_n^+ = sum_k C(n,k)^2 C(2k,k) (2k+1)^2`.
pub fn s_plus(n: u64) -> BigInt {
    s_square_weighted(n, false)
}

/// `S_n^- = sum_k (-1)^k C(n,k)^2 C(2k,k) (2k+1)^2`.
pub fn s_minus(n: u64) -> BigInt {
    s_square_weighted(n, true)
}

/// `(km+1)! / (k!)^m`.
pub fn multinomial_factor(m: u32, k: u64) -> BigInt {
    let mut fact = vec![BigInt::one()];
    let top = k * m as u64 + 1;
    for j in 1..=top {
        let next = &fact[j as usize - 1] * j;
        fact.push(next);
    }
    let denom = num_traits::pow(fact[k as usize].clone(), m as usize);
    &fact[top as usize] / denom
}

/// `S^(m)_n(x) = sum_k C(n,k)^m (km+1)!/(k!)^m x^k`.
pub fn s_m_poly(m: u32, n: u64) -> IntPolynomial {
    assert!(m >= 1, "m must be positive");
    IntPolynomial::new(
        BinomialRow::new(n)
            .take(n as usize + 1)
            .enumerate()
            .map(|(k, b)| num_traits::pow(b, m as usize) * multinomial_factor(m, k as u64))
            .collect(),
    )
}

fn recurrence_result(family: &str, n_max: u64, first_bad: Option<(u64, String)>) -> CheckResult {
    let r = CheckResult::new(family).param("n_max", n_max);
    let mut r = match first_bad {
        None => r,
        Some((n, residual)) => r.fail(format!("residual {residual} at n = {n}")),
    };
    r.lhs = "0".into();
    r.rhs = "0".into();
    r.modulus = "0".into();
    r
}

/// `(n+1)R_n - (7n+15)R_{n+1} + (7n+13)R_{n+2} - (n+3)R_{n+3} = 0`
/// for `0 <= n <= n_max - 3`.
pub fn check_recurrence_r(n_max: u64) -> CheckResult {
    let r = r_numbers(n_max);
    let bad = (0..n_max.saturating_sub(2)).find_map(|n| {
        let i = n as usize;
        let res = &r[i] * (n + 1) - &r[i + 1] * (7 * n + 15) + &r[i + 2] * (7 * n + 13)
            - &r[i + 3] * (n + 3);
        (!res.is_zero()).then(|| (n, res.to_string()))
    });
    recurrence_result("rec_R", n_max, bad)
}

/// The polynomial recurrence
/// `(n+1)R_n - (4nx+10x+3n+5)R_{n+1} + (4nx+6x+3n+7)R_{n+2} = (n+3)R_{n+3}`.
pub fn check_recurrence_r_poly(n_max: u64) -> CheckResult {
    let r: Vec<IntPolynomial> = (0..=n_max).map(r_poly).collect();
    let lin = |c0: u64, c1: u64| IntPolynomial::from_i64(&[c0 as i64, c1 as i64]);
    let bad = (0..n_max.saturating_sub(2)).find_map(|n| {
        let i = n as usize;
        let mut res = r[i].scale(&BigInt::from(n + 1));
        res -= &(&lin(3 * n + 5, 4 * n + 10) * &r[i + 1]);
        res += &(&lin(3 * n + 7, 4 * n + 6) * &r[i + 2]);
        res -= &r[i + 3].scale(&BigInt::from(n + 3));
        (!res.is_zero()).then(|| (n, render_poly(&res)))
    });
    recurrence_result("rec_Rpoly", n_max, bad)
}

/// `9(n+1)^2 S_n - (19n^2+74n+87) S_{n+1} + (n+3)(11n+29) S_{n+2} = (n+3)^2 S_{n+3}`.
pub fn check_recurrence_s(n_max: u64) -> CheckResult {
    let s = s_numbers(n_max);
    let bad = (0..n_max.saturating_sub(2)).find_map(|n| {
        let i = n as usize;
        let res = &s[i] * (9 * (n + 1) * (n + 1)) - &s[i + 1] * (19 * n * n + 74 * n + 87)
            + &s[i + 2] * ((n + 3) * (11 * n + 29))
            - &s[i + 3] * ((n + 3) * (n + 3));
        (!res.is_zero()).then(|| (n, res.to_string()))
    });
    recurrence_result("rec_S", n_max, bad)
}
