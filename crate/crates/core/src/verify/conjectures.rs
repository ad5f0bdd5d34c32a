//! Range scans for the open conjectures. Every instance is an exact check;
//! the growth claims are replaced by finitely checkable inequalities.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::irreducible::irreducibility_witness;
use super::logbounds::{combination_bounds, log_combination_sign};
use super::{combine, render_poly, CheckResult, Status};
use crate::error::Error;
use crate::exactnum::{binomial_i, legendre_symbol, odd_primes_below, primes_below, rat, ratio};
use crate::poly::IntPolynomial;
use crate::sequences::{
    r_numbers, r_poly, ratio_sum, s_m_poly, s_minus, s_numbers, s_plus, s_poly, s_small,
};

/// Bits of precision at which an undecided log comparison gives up.
pub const LOG_PRECISION_CAP: u32 = 4096;

fn legendre(a: i64, p: u64) -> BigRational {
    rat(legendre_symbol(&BigInt::from(a), &BigInt::from(p)).expect("odd prime"))
}

fn prefix_sums(values: impl IntoIterator<Item = BigInt>) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    let mut out = vec![acc.clone()];
    for v in values {
        acc += v;
        out.push(acc.clone());
    }
    out
}

/// `lhs < rhs` (or `>` when `greater`), rendered as the two values.
fn strict(base: CheckResult, lhs: &BigInt, rhs: &BigInt, greater: bool) -> CheckResult {
    let mut r = base;
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.modulus = "0".into();
    let want = if greater {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    if lhs.cmp(rhs) == want {
        r
    } else {
        let op = if greater { ">" } else { "<" };
        r.fail(format!("expected lhs {op} rhs; lhs - rhs = {}", lhs - rhs))
    }
}

/// For `p = 3 (mod 4)`: the two central-binomial congruences modulo `p^2`
/// with `c = C((p+1)/2, (p+1)/4)`.
pub fn check_conj51(p: u64) -> CheckResult {
    let base = CheckResult::new("conj51").param("p", p);
    let pb = BigInt::from(p);
    if !crate::exactnum::is_prime(p) || p % 4 != 3 {
        return base.ill_posed(Error::Precondition("need a prime p = 3 (mod 4)".into()));
    }
    let c = rat(binomial_i(p.div_ceil(2) as i64, (p + 1) / 4));
    let leg2 = legendre(2, p);
    let eight = BigInt::from(8);
    let two_pow = rat(num_traits::pow(BigInt::from(2), p as usize - 1) + 1);
    let squared = ratio_sum(p - 1, 0, &eight);
    let rhs1 = -&leg2 * rat(p + 1) / two_pow * &c;
    let shifted = rat(3) * ratio_sum(p - 1, 1, &eight);
    let rhs2 = rat(p) + leg2 * rat(2 * p) / c;
    combine(
        "conj51",
        &["claim"],
        vec![
            base.clone()
                .param("claim", "squared")
                .congruence(&squared, &rhs1, &pb, 2),
            base.param("claim", "shifted")
                .congruence(&shifted, &rhs2, &pb, 2),
        ],
    )
}

pub fn scan_conj51(max_p: u64) -> Vec<CheckResult> {
    let primes: Vec<u64> = odd_primes_below(max_p)
        .into_iter()
        .filter(|p| p % 4 == 3)
        .collect();
    primes.par_iter().map(|&p| check_conj51(p)).collect()
}

/// Which sequence a growth surrogate is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    R,
    S,
}

impl Growth {
    pub fn name(self) -> &'static str {
        match self {
            Growth::R => "R",
            Growth::S => "S",
        }
    }

    /// First index of the ratio claims and of the root claims.
    fn starts(self) -> (u64, u64) {
        match self {
            Growth::R => (3, 5),
            Growth::S => (3, 1),
        }
    }
}

fn log_claim(base: CheckResult, terms: &[(BigInt, &BigInt)], want: Ordering) -> CheckResult {
    let mut r =
        base.note("surrogate: sign of an integer combination of logarithms, by interval bounds");
    r.rhs = "0".into();
    r.modulus = "0".into();
    match log_combination_sign(terms, LOG_PRECISION_CAP) {
        Some(got) => {
            let (lo, hi) = combination_bounds(terms, 64);
            let scale = BigInt::from(1) << 64u32;
            r.lhs = format!(
                "[{}, {}]",
                BigRational::new(lo, scale.clone()),
                BigRational::new(hi, scale)
            );
            if got == want {
                r
            } else {
                r.fail(format!("combination has sign {got:?}, expected {want:?}"))
            }
        }
        None => {
            r.status = Status::Inconclusive;
            r.note(format!("undecided at {LOG_PRECISION_CAP} bits"))
        }
    }
}

/// Growth surrogates at index `n` given the table `v` of the sequence
/// (which must extend to `n + 2`):
/// ratio increase `v_{n+2} v_n > v_{n+1}^2`, the ratio bound
/// (`v_{n+1}/v_n < 3 + 2 sqrt 2` for `R`, `< 9` for `S`), and for the
/// `n`-th root ratio `b_n = v_{n+1}^(1/(n+1)) / v_n^(1/n)` both `b_n > 1`
/// and `b_{n+1} < b_n`.
pub fn check_conj52(seq: Growth, n: u64, v: &[BigInt]) -> CheckResult {
    let base = CheckResult::new("conj52")
        .param("seq", seq.name())
        .param("n", n);
    let (ratio_start, root_start) = seq.starts();
    let i = n as usize;
    if v.len() < i + 3 || n < ratio_start.min(root_start) {
        return base.ill_posed(Error::Precondition(
            "index outside the claimed range".into(),
        ));
    }
    let (a, b, c) = (&v[i], &v[i + 1], &v[i + 2]);
    let mut parts = Vec::new();
    if n >= ratio_start {
        parts.push(strict(
            base.clone().param("claim", "ratio increases"),
            &(c * a),
            &(b * b),
            true,
        ));
        let bound = match seq {
            Growth::R => {
                let excess: BigInt = b - a * 3;
                if excess.is_positive() {
                    strict(
                        base.clone().param("claim", "ratio bound"),
                        &(&excess * &excess),
                        &(a * a * 8),
                        false,
                    )
                } else {
                    strict(
                        base.clone().param("claim", "ratio bound"),
                        &(b.clone()),
                        &(a * 3 + 1),
                        false,
                    )
                }
            }
            Growth::S => strict(
                base.clone().param("claim", "ratio bound"),
                b,
                &(a * 9),
                false,
            ),
        };
        parts.push(bound);
    }
    if n >= root_start {
        let (n0, n1, n2) = (BigInt::from(n), BigInt::from(n + 1), BigInt::from(n + 2));
        // n ln v_{n+1} - (n+1) ln v_n > 0
        parts.push(log_claim(
            base.clone().param("claim", "root ratio above 1"),
            &[(n0.clone(), b), (-n1.clone(), a)],
            Ordering::Greater,
        ));
        // n(n+1) ln v_{n+2} - 2n(n+2) ln v_{n+1} + (n+1)(n+2) ln v_n < 0
        parts.push(log_claim(
            base.param("claim", "root ratio decreases"),
            &[
                (&n0 * &n1, c),
                (-(&n0 * &n2 * BigInt::from(2)), b),
                (&n1 * &n2, a),
            ],
            Ordering::Less,
        ));
    }
    combine("conj52", &["claim"], parts)
}

/// [`check_conj52`] for `R` (from `n = 3`) and `S` (from `n = 1`) up to `max_n`.
pub fn scan_conj52(max_n: u64) -> Vec<CheckResult> {
    let r = r_numbers(max_n + 2);
    let s = s_numbers(max_n + 2);
    let mut jobs: Vec<(Growth, u64)> = (3..=max_n).map(|n| (Growth::R, n)).collect();
    jobs.extend((1..=max_n).map(|n| (Growth::S, n)));
    jobs.par_iter()
        .map(|&(seq, n)| {
            let table = if seq == Growth::R { &r } else { &s };
            check_conj52(seq, n, table)
        })
        .collect()
}

/// Searches `candidates` for a prime modulo which `R_n(x)` (or `S_n(x)`)
/// stays irreducible of full degree. Exhausting them is `INCONCLUSIVE`.
pub fn conj53_witness(seq: Growth, n: u64, candidates: &[u64]) -> CheckResult {
    let base = CheckResult::new("conj53")
        .param("seq", seq.name())
        .param("n", n);
    if n == 0 {
        return base.ill_posed(Error::Precondition("need n >= 1".into()));
    }
    let f: IntPolynomial = match seq {
        Growth::R => r_poly(n),
        Growth::S => s_poly(n),
    };
    let mut r = base;
    r.lhs = render_poly(&f);
    r.rhs = "irreducible".into();
    match irreducibility_witness(&f, candidates) {
        Some(p) => {
            r.modulus = p.to_string();
            r.note(format!("irreducible modulo {p}, hence over Q"))
        }
        None => {
            r.modulus = "0".into();
            r.status = Status::Inconclusive;
            r.note(format!(
                "no witness among {} candidate primes",
                candidates.len()
            ))
        }
    }
}

pub fn scan_conj53(max_n: u64, max_p: u64) -> Vec<CheckResult> {
    let candidates = primes_below(max_p);
    let mut jobs: Vec<(Growth, u64)> = (1..=max_n).map(|n| (Growth::R, n)).collect();
    jobs.extend((1..=max_n).map(|n| (Growth::S, n)));
    jobs.par_iter()
        .map(|&(seq, n)| conj53_witness(seq, n, &candidates))
        .collect()
}

/// Prefix sums of `R_k^2` and `(2k+1) R_k^2`, `k < len`.
struct SquareSums {
    plain: Vec<BigInt>,
    odd: Vec<BigInt>,
}

impl SquareSums {
    fn new(len: u64) -> Self {
        let r = r_numbers(len.max(1));
        let squares: Vec<BigInt> = r.iter().map(|x| x * x).collect();
        SquareSums {
            plain: prefix_sums(squares.iter().cloned()),
            odd: prefix_sums(
                squares
                    .iter()
                    .enumerate()
                    .map(|(k, s)| s * (2 * k as u64 + 1)),
            ),
        }
    }
}

fn conj54_n(n: u64, t: &SquareSums) -> CheckResult {
    let base = CheckResult::new("conj54").param("n", n);
    let nb = BigInt::from(n);
    let i = n as usize;
    combine(
        "conj54",
        &["claim"],
        vec![
            base.clone()
                .param("claim", "3 sum R^2 over n")
                .divisible(&rat(&t.plain[i] * 3), &nb),
            base.param("claim", "sum (2k+1) R^2 over n")
                .divisible(&rat(t.odd[i].clone()), &nb),
        ],
    )
}

fn conj54_p(p: u64, t: &SquareSums) -> CheckResult {
    let base = CheckResult::new("conj54_p").param("p", p);
    let pb = BigInt::from(p);
    let i = p as usize;
    let leg = legendre(-1, p);
    let rhs1 = ratio(p, 3) * (rat(11) - rat(4) * &leg);
    let rhs2 = rat(4 * p) * leg - rat(p * p);
    combine(
        "conj54_p",
        &["claim"],
        vec![
            base.clone().param("claim", "sum R^2").congruence(
                &rat(t.plain[i].clone()),
                &rhs1,
                &pb,
                2,
            ),
            base.param("claim", "sum (2k+1) R^2")
                .congruence(&rat(t.odd[i].clone()), &rhs2, &pb, 3),
        ],
    )
}

/// `3/n sum_{k<n} R_k^2` and `1/n sum_{k<n} (2k+1) R_k^2` are integers.
pub fn check_conj54(n: u64) -> CheckResult {
    if n == 0 {
        return CheckResult::new("conj54")
            .param("n", n)
            .ill_posed(Error::Precondition("need n >= 1".into()));
    }
    conj54_n(n, &SquareSums::new(n))
}

/// The two prime-modulus congruences for `sum_{k<p} R_k^2`, as printed.
pub fn check_conj54_p(p: u64) -> CheckResult {
    if p < 3 || !crate::exactnum::is_prime(p) {
        return CheckResult::new("conj54_p")
            .param("p", p)
            .ill_posed(Error::NotOddPrime(BigInt::from(p)));
    }
    conj54_p(p, &SquareSums::new(p))
}

pub fn scan_conj54(max_n: u64) -> Vec<CheckResult> {
    let t = SquareSums::new(max_n);
    (1..=max_n)
        .into_par_iter()
        .map(|n| conj54_n(n, &t))
        .collect()
}

pub fn scan_conj54_p(max_p: u64) -> Vec<CheckResult> {
    let primes = odd_primes_below(max_p);
    let t = SquareSums::new(primes.last().copied().unwrap_or(0));
    primes.par_iter().map(|&p| conj54_p(p, &t)).collect()
}

/// Prefix sums of `k S_k`.
fn weighted_s_prefix(len: u64) -> Vec<BigInt> {
    let s = s_numbers(len.max(1));
    prefix_sums(s.into_iter().enumerate().map(|(k, v)| v * k as u64))
}

fn conj55_n(n: u64, pre: &[BigInt]) -> CheckResult {
    let nb = BigInt::from(n);
    CheckResult::new("conj55")
        .param("n", n)
        .divisible(&rat(&pre[n as usize] * 4), &(&nb * &nb))
}

fn conj55_p(p: u64, pre: &[BigInt]) -> CheckResult {
    let pb = BigInt::from(p);
    let leg3 = rat(legendre_symbol(&pb, &BigInt::from(3)).expect("3 is an odd prime"));
    let rhs = ratio(p * p, 8) * (rat(5) - rat(9) * leg3);
    CheckResult::new("conj55_p").param("p", p).congruence(
        &rat(pre[p as usize].clone()),
        &rhs,
        &pb,
        3,
    )
}

/// `4/n^2 sum_{k<n} k S_k` is an integer.
pub fn check_conj55(n: u64) -> CheckResult {
    if n == 0 {
        return CheckResult::new("conj55")
            .param("n", n)
            .ill_posed(Error::Precondition("need n >= 1".into()));
    }
    conj55_n(n, &weighted_s_prefix(n))
}

/// `sum_{k<p} k S_k = p^2/8 (5 - 9 (p/3)) (mod p^3)` for every prime `p`.
pub fn check_conj55_p(p: u64) -> CheckResult {
    if !crate::exactnum::is_prime(p) {
        return CheckResult::new("conj55_p")
            .param("p", p)
            .ill_posed(Error::NotPrime(BigInt::from(p)));
    }
    conj55_p(p, &weighted_s_prefix(p))
}

pub fn scan_conj55(max_n: u64) -> Vec<CheckResult> {
    let pre = weighted_s_prefix(max_n);
    (1..=max_n)
        .into_par_iter()
        .map(|n| conj55_n(n, &pre))
        .collect()
}

pub fn scan_conj55_p(max_p: u64) -> Vec<CheckResult> {
    let primes = primes_below(max_p);
    let pre = weighted_s_prefix(primes.last().copied().unwrap_or(0));
    primes.par_iter().map(|&p| conj55_p(p, &pre)).collect()
}

struct CompanionSums {
    small: Vec<BigInt>,
    plus: Vec<BigInt>,
    minus: Vec<BigInt>,
}

impl CompanionSums {
    fn new(len: u64) -> Self {
        let table =
            |f: fn(u64) -> BigInt| prefix_sums((0..len).into_par_iter().map(f).collect::<Vec<_>>());
        CompanionSums {
            small: table(s_small),
            plus: table(s_plus),
            minus: table(s_minus),
        }
    }

    fn conj56(&self, n: u64) -> CheckResult {
        let base = CheckResult::new("conj56").param("n", n);
        let nb = BigInt::from(n);
        let n2 = &nb * &nb;
        let i = n as usize;
        combine(
            "conj56",
            &["claim"],
            vec![
                base.clone()
                    .param("claim", "s")
                    .divisible(&rat(self.small[i].clone()), &n2),
                base.clone()
                    .param("claim", "S+")
                    .divisible(&rat(self.plus[i].clone()), &n2),
                base.param("claim", "S-")
                    .divisible(&rat(self.minus[i].clone()), &n2),
            ],
        )
    }

    fn remark53(&self, n: u64) -> CheckResult {
        let base = CheckResult::new("remark53").param("n", n);
        let nb = BigInt::from(n);
        let i = n as usize;
        combine(
            "remark53",
            &["claim"],
            vec![
                base.clone()
                    .param("claim", "S+")
                    .divisible(&rat(self.plus[i].clone()), &nb),
                base.param("claim", "S-")
                    .divisible(&rat(self.minus[i].clone()), &nb),
            ],
        )
    }
}

/// `n^2` divides `sum_{k<n} s_k`, `sum_{k<n} S_k^+` and `sum_{k<n} S_k^-`.
pub fn check_conj56(n: u64) -> CheckResult {
    CompanionSums::new(n).conj56(n)
}

/// `n` divides `sum_{k<n} S_k^+` and `sum_{k<n} S_k^-`.
pub fn check_remark53(n: u64) -> CheckResult {
    CompanionSums::new(n).remark53(n)
}

pub fn scan_conj56(max_n: u64) -> Vec<CheckResult> {
    let t = CompanionSums::new(max_n);
    (1..=max_n).into_par_iter().map(|n| t.conj56(n)).collect()
}

pub fn scan_remark53(max_n: u64) -> Vec<CheckResult> {
    let t = CompanionSums::new(max_n);
    (1..=max_n).into_par_iter().map(|n| t.remark53(n)).collect()
}

fn conj58_from_sum(m: u32, n: u64, sum: &IntPolynomial) -> CheckResult {
    let base = CheckResult::new("conj58i").param("m", m).param("n", n);
    let nb = BigInt::from(n);
    let mut r = base;
    r.modulus = n.to_string();
    r.rhs = "0".into();
    r.lhs = render_poly(&IntPolynomial::new(
        sum.coeffs()
            .iter()
            .map(|c| num_integer::Integer::mod_floor(c, &nb))
            .collect(),
    ));
    match sum
        .coeffs()
        .iter()
        .position(|c| !num_integer::Integer::is_multiple_of(c, &nb))
    {
        Some(k) => r.fail(format!("coefficient of x^{k} is {}", sum.coeff(k))),
        None => r,
    }
}

/// `n` divides every coefficient of `sum_{k<n} S^(m)_k(x)`.
pub fn check_conj58_i(m: u32, n: u64) -> CheckResult {
    if m == 0 || n == 0 {
        return CheckResult::new("conj58i")
            .param("m", m)
            .param("n", n)
            .ill_posed(Error::Precondition("need m, n >= 1".into()));
    }
    let mut sum = IntPolynomial::zero();
    for k in 0..n {
        sum += &s_m_poly(m, k);
    }
    conj58_from_sum(m, n, &sum)
}

pub fn scan_conj58_i(max_m: u32, max_n: u64) -> Vec<CheckResult> {
    (1..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| {
            let mut acc = IntPolynomial::zero();
            let mut out = Vec::with_capacity(max_n as usize);
            for n in 1..=max_n {
                acc += &s_m_poly(m, n - 1);
                out.push(conj58_from_sum(m, n, &acc));
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::BinomialRow;
    use crate::sequences::{multinomial_factor, r_number};

    #[test]
    fn conj51_small_primes() {
        for p in [3, 7, 11, 19, 23, 31, 43] {
            let r = check_conj51(p);
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(check_conj51(5).status, Status::IllPosed);
        assert_eq!(scan_conj51(50).len(), 8);
    }

    #[test]
    fn conj52_spec_instance() {
        let r = r_numbers(8);
        assert_eq!(
            (&r[4], &r[5], &r[6]),
            (&BigInt::from(87), &BigInt::from(329), &BigInt::from(1359))
        );
        let c = check_conj52(Growth::R, 4, &r);
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.lhs, "118233");
        assert_eq!(c.rhs, "108241");
    }

    #[test]
    fn root_ratio_claims_match_exact_powers() {
        // For small n the log surrogates can be checked against exact powers.
        let r = r_numbers(40);
        let s = s_numbers(40);
        for (table, start) in [(&r, 5usize), (&s, 1usize)] {
            for n in start..=36 {
                let (a, b) = (&table[n], &table[n + 1]);
                let above = num_traits::pow(b.clone(), n) > num_traits::pow(a.clone(), n + 1);
                assert!(above, "n={n}");
                let c = &table[n + 2];
                let e = |x: &BigInt, k: usize| num_traits::pow(x.clone(), k);
                let lhs = e(c, n * (n + 1)) * e(a, (n + 1) * (n + 2));
                let rhs = e(b, 2 * n * (n + 2));
                assert!(lhs < rhs, "n={n}");
            }
        }
        let scan = scan_conj52(36);
        assert!(scan.iter().all(|r| r.passed()));
    }

    #[test]
    fn reverse_root_inequality_fails() {
        // R_6^5 < R_5^6 is false: the n-th roots increase.
        let r = r_numbers(7);
        assert!(num_traits::pow(r[6].clone(), 5) > num_traits::pow(r[5].clone(), 6));
    }

    #[test]
    fn conj53_examples() {
        let primes = primes_below(200);
        let r1 = conj53_witness(Growth::R, 1, &primes);
        assert!(r1.passed());
        assert_eq!(r1.lhs, "[-1,2]");
        let s2 = conj53_witness(Growth::S, 2, &primes);
        assert!(s2.passed());
        assert_eq!(s2.modulus, "17");
        let none = conj53_witness(Growth::S, 2, &[2, 3, 5]);
        assert_eq!(none.status, Status::Inconclusive);
    }

    #[test]
    fn conj54_examples() {
        let r = check_conj54(3);
        assert!(r.passed());
        // 3 (1 + 1 + 49) / 3 = 51
        assert_eq!(r.lhs, "0");
        assert_eq!(SquareSums::new(3).plain[3], BigInt::from(51));
        let scan = scan_conj54(50);
        assert_eq!(scan.len(), 50);
        assert!(scan.iter().all(|r| r.passed()));
        for p in [3, 5, 7, 11, 13] {
            assert!(check_conj54_p(p).passed(), "p={p}");
        }
        assert_eq!(scan_conj54_p(40).len(), 11);
    }

    #[test]
    fn conj55_examples() {
        assert!(check_conj55(2).passed());
        assert_eq!(weighted_s_prefix(2)[2], BigInt::from(7));
        for p in [2, 3, 5, 7, 11] {
            assert!(check_conj55_p(p).passed(), "p={p}");
        }
        assert!(scan_conj55(40).iter().all(|r| r.passed()));
    }

    #[test]
    fn conj56_and_remark53() {
        assert!(scan_conj56(30).iter().all(|r| r.passed()));
        assert!(scan_remark53(30).iter().all(|r| r.passed()));
        assert_eq!(check_conj56(7), scan_conj56(7)[6]);
        assert_eq!(check_remark53(5), scan_remark53(5)[4]);
    }

    #[test]
    fn conj58_coefficient_form_agrees() {
        // Coefficient of x^k in the sum equals (km+1)!/(k!)^m sum_{h=k}^{n-1} C(h,k)^m.
        for m in 1..=3u32 {
            let n = 9u64;
            let mut sum = IntPolynomial::zero();
            for h in 0..n {
                sum += &s_m_poly(m, h);
            }
            for k in 0..n {
                let inner: BigInt = (k..n)
                    .map(|h| {
                        num_traits::pow(BinomialRow::new(h).nth(k as usize).unwrap(), m as usize)
                    })
                    .sum();
                assert_eq!(sum.coeff(k as usize), multinomial_factor(m, k) * inner);
            }
        }
        let scan = scan_conj58_i(3, 15);
        assert_eq!(scan.len(), 45);
        assert!(scan.iter().all(|r| r.passed()));
        assert_eq!(check_conj58_i(2, 7), scan[15 + 6]);
        assert_eq!(r_number(2), BigInt::from(7));
    }
}
