//! The q-congruences: each divisibility is decided by exact division by a
//! monic modulus, so quotients stay in `Z[q]`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{cyclotomic, q_binomial_poly, q_integer_poly, QRationalFunction};
use crate::error::Error;
use crate::exactnum::{binomial_i, rat};
use crate::poly::IntPolynomial;
use crate::verify::{render_poly, CheckResult, Status};

fn reduce(p: &IntPolynomial, modulus: &IntPolynomial) -> IntPolynomial {
    p.rem_unit_leading(modulus).expect("monic modulus")
}

fn mul_mod(a: &IntPolynomial, b: &IntPolynomial, modulus: &IntPolynomial) -> IntPolynomial {
    reduce(&(a * b), modulus)
}

/// Records `value ≡ 0 (mod modulus)` where `value` is already reduced.
fn zero_residue(
    mut out: CheckResult,
    residue: &IntPolynomial,
    modulus: &IntPolynomial,
) -> CheckResult {
    out.lhs = render_poly(residue);
    out.rhs = render_poly(&IntPolynomial::zero());
    out.modulus = render_poly(modulus);
    if residue.is_zero() {
        out.status = Status::Pass;
        out
    } else {
        out.fail(format!("nonzero remainder {}", render_poly(residue)))
    }
}

/// `[ad+s choose bd+t]_q ≡ C(a,b) [s choose t]_q (mod Φ_d(q))`.
pub fn check_q_lucas(a: u64, b: u64, s: u64, t: u64, d: u64) -> CheckResult {
    let out = CheckResult::new("qlucas")
        .param("a", a)
        .param("b", b)
        .param("s", s)
        .param("t", t)
        .param("d", d);
    if d == 0 || s >= d || t >= d {
        return out.ill_posed(Error::Precondition("need d >= 1 and s, t < d".into()));
    }
    let phi = cyclotomic(d);
    let lhs = reduce(
        &q_binomial_poly((a * d + s) as usize, (b * d + t) as usize),
        &phi,
    );
    let rhs = reduce(
        &q_binomial_poly(s as usize, t as usize).scale(&binomial_i(a as i64, b)),
        &phi,
    );
    let mut out = out;
    out.lhs = render_poly(&lhs);
    out.rhs = render_poly(&rhs);
    out.modulus = render_poly(&phi);
    if lhs == rhs {
        out
    } else {
        let diff = &lhs - &rhs;
        out.fail(format!("lhs - rhs = {}", render_poly(&diff)))
    }
}

/// `Σ_{h<n} q^h [h choose k]_q^2` for every `n` in `1..=max_n`.
fn squared_row_prefix(k: usize, max_n: usize) -> Vec<IntPolynomial> {
    let mut acc = IntPolynomial::zero();
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(IntPolynomial::zero());
    for h in 0..max_n {
        if h >= k {
            acc += &q_binomial_poly(h, k).pow(2).shift(h);
        }
        out.push(acc.clone());
    }
    out
}

/// `Φ_n(q)` divides `Σ_{h<n} q^h [h choose k]_q^2` when `k < (n-1)/2`.
pub fn check_lemma32(n: u64, k: u64) -> CheckResult {
    let out = CheckResult::new("lemma32").param("n", n).param("k", k);
    if n == 0 || 2 * k + 1 >= n {
        return out.ill_posed(Error::Precondition("need k < (n-1)/2".into()));
    }
    let sum = &squared_row_prefix(k as usize, n as usize)[n as usize];
    let phi = cyclotomic(n);
    zero_residue(out, &reduce(sum, &phi), &phi)
}

fn theorem31_from_prefix(n: u64, k: u64, prefix: &IntPolynomial) -> CheckResult {
    let out = CheckResult::new("thm31").param("n", n).param("k", k);
    if k >= n {
        return out.ill_posed(Error::Precondition("need n > k >= 0".into()));
    }
    let modulus = q_integer_poly(n as usize);
    let factor = &q_integer_poly(2 * k as usize + 1) * &q_binomial_poly(2 * k as usize, k as usize);
    let residue = mul_mod(
        &reduce(&factor, &modulus),
        &reduce(prefix, &modulus),
        &modulus,
    );
    let q_result = zero_residue(out, &residue, &modulus);

    // q -> 1: (2k+1) C(2k,k) Σ_{h<n} C(h,k)^2 ≡ 0 (mod n)
    let value =
        prefix.eval_int(&BigInt::one()) * BigInt::from(2 * k + 1) * binomial_i(2 * k as i64, k);
    let classical = CheckResult::new("thm31_at_q1").divisible(&rat(value), &BigInt::from(n));
    q_result.and(classical)
}

/// `[n]_q` divides `[2k+1]_q [2k choose k]_q Σ_{h<n} q^h [h choose k]_q^2`,
/// together with its `q = 1` integer form.
pub fn check_theorem31_q(n: u64, k: u64) -> CheckResult {
    if k >= n {
        return theorem31_from_prefix(n, k, &IntPolynomial::zero());
    }
    let prefix = squared_row_prefix(k as usize, n as usize);
    theorem31_from_prefix(n, k, &prefix[n as usize])
}

/// Every `(n, k)` with `k < n <= max_n`, ordered by `n` then `k`.
pub fn scan_theorem31_q(max_n: u64) -> Vec<CheckResult> {
    use rayon::prelude::*;
    let per_k: Vec<Vec<CheckResult>> = (0..max_n)
        .into_par_iter()
        .map(|k| {
            let prefix = squared_row_prefix(k as usize, max_n as usize);
            (k + 1..=max_n)
                .map(|n| theorem31_from_prefix(n, k, &prefix[n as usize]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 0..n {
            out.push(per_k[k as usize][(n - k - 1) as usize].clone());
        }
    }
    out
}

/// `[n]_q` divides `Σ_{k<n} (-1)^{a'k} q^{a'k(k+1)/2 - k} [2k+1]_q [n-1 choose k]_q^a [n+k choose k]_q^b`.
///
/// The sum is multiplied by `q^{n-1}` first so every exponent is
/// nonnegative; `q` is a unit modulo `[n]_q`, so the verdict is unchanged.
/// The `q = 1` integer form is checked alongside.
pub fn check_theorem32_q(n: u64, a: u64, b: u64, a_prime: u64) -> CheckResult {
    let out = CheckResult::new("thm32")
        .param("n", n)
        .param("a", a)
        .param("b", b)
        .param("a_prime", a_prime);
    if n == 0 || !(a_prime == a || a_prime + 1 == a) {
        return out.ill_posed(Error::Precondition("need n >= 1 and a' in {a, a-1}".into()));
    }
    let modulus = q_integer_poly(n as usize);
    let mut residue = IntPolynomial::zero();
    let mut classical = BigInt::zero();
    let nu = n as usize;
    for k in 0..nu {
        let ku = k as u64;
        let exponent = (a_prime as usize) * k * (k + 1) / 2 + nu - 1 - k;
        let mut term = q_integer_poly(2 * k + 1).shift(exponent);
        let lower = q_binomial_poly(nu - 1, k);
        let upper = q_binomial_poly(nu + k, k);
        for _ in 0..a {
            term = mul_mod(&term, &lower, &modulus);
        }
        for _ in 0..b {
            term = mul_mod(&term, &upper, &modulus);
        }
        let negative = a_prime * ku % 2 == 1;
        if negative {
            residue -= &term;
        } else {
            residue += &term;
        }
        let mut c = BigInt::from(2 * ku + 1)
            * num_traits::pow(binomial_i(n as i64 - 1, ku), a as usize)
            * num_traits::pow(binomial_i((n + ku) as i64, ku), b as usize);
        if negative {
            c = -c;
        }
        classical += c;
    }
    let residue = reduce(&residue, &modulus);
    let q_result = zero_residue(out, &residue, &modulus).note(format!(
        "sum multiplied by q^{} to clear negative exponents",
        n - 1
    ));
    let at_one = CheckResult::new("thm32_at_q1").divisible(&rat(classical), &BigInt::from(n));
    q_result.and(at_one)
}

/// `s_n(q) = Σ_{k<=n} [n choose k]_q^2 [2k choose k]_q q^k / [2k-1]_q`.
pub fn s_q(n: u64) -> QRationalFunction {
    let nu = n as usize;
    // k = 0: 1/[-1]_q = -q
    let mut poly = IntPolynomial::from_i64(&[0, -1]);
    let mut leftover = QRationalFunction::zero();
    for k in 1..=nu {
        let central = q_binomial_poly(2 * k, k);
        let weight = q_binomial_poly(nu, k).pow(2).shift(k);
        let (quot, rem) = central
            .divrem_unit_leading(&q_integer_poly(2 * k - 1))
            .expect("monic divisor");
        if rem.is_zero() {
            poly += &(&weight * &quot);
        } else {
            leftover = leftover.add(&QRationalFunction::new(
                &weight * &central,
                q_integer_poly(2 * k - 1),
            ));
        }
    }
    QRationalFunction::from_poly(poly).add(&leftover)
}

fn s_q_poly(n: u64) -> IntPolynomial {
    s_q(n).as_polynomial().expect("s_n(q) is a polynomial")
}

fn conj57_from_sum(n: u64, weighted_sum: &IntPolynomial) -> CheckResult {
    let out = CheckResult::new("conj57").param("n", n);
    let a = &IntPolynomial::from_i64(&[1, 1]) * weighted_sum;
    let modulus = q_integer_poly(n as usize).pow(2);
    let (quot, rem) = a.divrem_unit_leading(&modulus).expect("monic modulus");
    let class = if quot.coeffs().iter().all(|c| c.is_even()) {
        "integral"
    } else {
        "half-integral"
    };
    zero_residue(out, &rem, &modulus).note(format!(
        "(1+q) sum divided by [n]_q^2; halved quotient is {class}"
    ))
}

/// `(1+q) Σ_{k<n} q^k s_k(q)` is divisible by `[n]_q^2`; the note records
/// whether half the quotient still has integer coefficients.
pub fn check_conj57(n: u64) -> CheckResult {
    let mut sum = IntPolynomial::zero();
    for k in 0..n {
        sum += &s_q_poly(k).shift(k as usize);
    }
    conj57_from_sum(n, &sum)
}

/// `check_conj57` for every `n` in `1..=max_n`, sharing the prefix sums.
pub fn scan_conj57(max_n: u64) -> Vec<CheckResult> {
    use rayon::prelude::*;
    let terms: Vec<IntPolynomial> = (0..max_n)
        .into_par_iter()
        .map(|k| s_q_poly(k).shift(k as usize))
        .collect();
    let mut prefix = Vec::with_capacity(max_n as usize);
    let mut sum = IntPolynomial::zero();
    for t in &terms {
        sum += t;
        prefix.push(sum.clone());
    }
    (1..=max_n)
        .into_par_iter()
        .map(|n| conj57_from_sum(n, &prefix[n as usize - 1]))
        .collect()
}

/// For every `k < n`, `[n]_q` divides
/// `[km+1]_q! / ([k]_q!)^m · Σ_{h=k}^{n-1} q^h [h choose k]_q^m`.
pub fn check_conj58_q(m: u64, n: u64) -> CheckResult {
    let out = CheckResult::new("conj58ii").param("m", m).param("n", n);
    if m == 0 || n == 0 {
        return out.ill_posed(Error::Precondition("need m, n >= 1".into()));
    }
    let modulus = q_integer_poly(n as usize);
    let (mu, nu) = (m as usize, n as usize);
    for k in 0..nu {
        // [km+1]_q!/([k]_q!)^m = [km+1]_q ∏_{i=1}^{m} [ik choose k]_q
        let mut factor = reduce(&q_integer_poly(k * mu + 1), &modulus);
        for i in 1..=mu {
            factor = mul_mod(&factor, &q_binomial_poly(i * k, k), &modulus);
        }
        let mut sum = IntPolynomial::zero();
        for h in k..nu {
            sum += &reduce(&q_binomial_poly(h, k).pow(m as u32).shift(h), &modulus);
        }
        let residue = mul_mod(&factor, &reduce(&sum, &modulus), &modulus);
        if !residue.is_zero() {
            return zero_residue(out.param("k", k), &residue, &modulus);
        }
    }
    zero_residue(out, &IntPolynomial::zero(), &modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::s_small;

    #[test]
    fn q_lucas_examples() {
        assert!(check_q_lucas(2, 1, 1, 1, 2).passed());
        assert!(check_q_lucas(1, 0, 0, 0, 3).passed());
        assert!(check_q_lucas(1, 1, 2, 0, 3).passed());
        assert_eq!(check_q_lucas(1, 1, 3, 0, 3).status, Status::IllPosed);
    }

    #[test]
    fn q_lucas_grid() {
        for d in 1..=6 {
            for a in 0..=6 {
                for b in 0..=6 {
                    for s in 0..d {
                        for t in 0..d {
                            let r = check_q_lucas(a, b, s, t, d);
                            assert!(r.passed(), "{r:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma32_examples_and_precondition() {
        assert!(check_lemma32(5, 1).passed());
        assert!(check_lemma32(3, 0).passed());
        assert!(check_lemma32(7, 2).passed());
        assert_eq!(check_lemma32(5, 2).status, Status::IllPosed);
    }

    #[test]
    fn lemma32_bound_is_needed() {
        // k = (n-1)/2 is outside the hypothesis and the divisibility fails there.
        let n = 5usize;
        let sum = &squared_row_prefix(2, n)[n];
        assert!(!reduce(sum, &cyclotomic(n as u64)).is_zero());
    }

    #[test]
    fn theorem31_examples() {
        assert!(check_theorem31_q(1, 0).passed());
        assert!(check_theorem31_q(4, 1).passed());
        assert!(check_theorem31_q(6, 2).passed());
    }

    #[test]
    fn theorem31_spec_division_example() {
        // n = 3, k = 1: [3]_q [2]_q (q + q^2 (1+q)^2) is divisible by [3]_q.
        let value = &(&q_integer_poly(3) * &q_binomial_poly(2, 1)) * &squared_row_prefix(1, 3)[3];
        assert!(crate::poly::divides_in_zq(&q_integer_poly(3), &value).unwrap());
    }

    #[test]
    fn theorem31_scan_matches_single() {
        let scan = scan_theorem31_q(9);
        assert_eq!(scan.len(), 45);
        let mut it = scan.iter();
        for n in 1..=9 {
            for k in 0..n {
                assert_eq!(it.next().unwrap(), &check_theorem31_q(n, k));
            }
        }
    }

    #[test]
    fn theorem32_examples() {
        for (a, b) in [(0, 0), (1, 2), (2, 1)] {
            assert!(check_theorem32_q(1, a, b, a).passed());
        }
        assert!(check_theorem32_q(3, 1, 1, 1).passed());
        assert!(check_theorem32_q(4, 2, 0, 1).passed());
        assert_eq!(check_theorem32_q(4, 2, 0, 0).status, Status::IllPosed);
    }

    #[test]
    fn s_q_examples() {
        assert_eq!(
            s_q(0).as_polynomial(),
            Some(IntPolynomial::from_i64(&[0, -1]))
        );
        assert_eq!(
            s_q(1).as_polynomial(),
            Some(IntPolynomial::from_i64(&[0, 0, 1]))
        );
    }

    #[test]
    fn s_q_is_polynomial_and_degenerates() {
        for n in 0..=25u64 {
            let s = s_q(n);
            assert!(s.as_polynomial().is_some(), "n={n}");
            if n <= 20 {
                assert_eq!(s.eval(&rat(1)).unwrap(), rat(s_small(n)), "n={n}");
            }
        }
    }

    #[test]
    fn s_q_matches_rational_function_sum() {
        for n in 0..=6u64 {
            let mut direct = QRationalFunction::zero();
            for k in 0..=n as i64 {
                let num = QRationalFunction::from_poly(
                    &q_binomial_poly(n as usize, k as usize).pow(2)
                        * &q_binomial_poly(2 * k as usize, k as usize).shift(k as usize),
                );
                direct = direct.add(&num.div(&super::super::q_integer(2 * k - 1)));
            }
            assert_eq!(direct, s_q(n));
        }
    }

    #[test]
    fn conj57_small_cases() {
        let r1 = check_conj57(1);
        assert!(r1.passed());
        let r2 = check_conj57(2);
        assert!(r2.passed());
        assert!(r2.note.as_deref().unwrap().contains("half-integral"));
        let scan = scan_conj57(6);
        for (i, r) in scan.iter().enumerate() {
            assert_eq!(r, &check_conj57(i as u64 + 1));
        }
    }

    #[test]
    fn conj58_examples() {
        assert!(check_conj58_q(1, 2).passed());
        for n in 1..=8 {
            assert!(check_conj58_q(2, n).passed(), "n={n}");
        }
    }
}
