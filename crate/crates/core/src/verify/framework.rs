//! Checkers for the kernel framework: partial summation against products
//! of binomial coefficients, with the kernel `f` supplied as a
//! [`KernelSpec`].

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::Zero;

use super::{combine, render_list, CheckResult, KernelHypothesis, KernelSpec};
use crate::error::{Error, Result};
use crate::exactnum::{binomial_i, rat, BinomialRow};

fn alt(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `prod_i C(a_i - 1, b_i + k)` for `k < n`.
pub(crate) fn shifted_products(a_list: &[i64], b_list: &[u64], n: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1); n as usize];
    for (&a, &b) in a_list.iter().zip(b_list) {
        let row = BinomialRow::new(a - 1).skip(b as usize).take(n as usize);
        for (acc, c) in out.iter_mut().zip(row) {
            *acc *= c;
        }
    }
    out
}

/// `prod_i C(a_i n - 1, k) C(-a_i n - 1, k)` for `k < n`.
pub(crate) fn symmetric_products(a_list: &[i64], n: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1); n as usize];
    let ni = n as i64;
    for &a in a_list {
        let up = BinomialRow::new(a * ni - 1);
        let down = BinomialRow::new(-a * ni - 1);
        for (acc, (u, d)) in out.iter_mut().zip(up.zip(down)) {
            *acc *= u * d;
        }
    }
    out
}

fn gcd_all(values: impl IntoIterator<Item = i64>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |g, v| g.gcd(&BigInt::from(v)))
}

fn lists_base(family: &str, n: u64, a_list: &[i64], b_list: Option<&[u64]>) -> CheckResult {
    let r = CheckResult::new(family)
        .param("n", n)
        .param("a", render_list(a_list));
    match b_list {
        Some(b) => r.param("b", render_list(b)),
        None => r,
    }
}

fn kernel_or_ill_posed(
    base: CheckResult,
    kernel: &KernelSpec,
    hyp: KernelHypothesis,
    upto: u64,
    m: i64,
) -> std::result::Result<Vec<BigRational>, Box<CheckResult>> {
    kernel
        .require(hyp, upto, m)
        .and_then(|_| kernel.values(upto, m))
        .map_err(|e| Box::new(base.ill_posed(e)))
}

fn precondition(base: CheckResult, msg: &str) -> CheckResult {
    base.ill_posed(Error::Precondition(msg.into()))
}

/// `sum_{k<n} (f(k+1) - (-1)^m f(k)) prod_i C(a_i - 1, b_i + k) = 0 (mod d)`
/// with `d = gcd(a, b, n)`, and, when `k^2 | f(k)`, the refinement modulo
/// `d^2` against `(-1)^m (sum a_i) sum_{0<k<n} f(k)/k prod_i C(a_i-1, b_i+k)`.
pub fn check_thm41(n: u64, kernel: &KernelSpec, a_list: &[i64], b_list: &[u64]) -> CheckResult {
    let base = lists_base("thm41", n, a_list, Some(b_list)).param("kernel", kernel);
    if n == 0 || a_list.is_empty() || a_list.len() != b_list.len() {
        return precondition(base, "need n >= 1 and nonempty a, b of equal length");
    }
    let m = a_list.len() as i64;
    let f = match kernel_or_ill_posed(
        base.clone(),
        kernel,
        KernelHypothesis::PowerDivides(1),
        n,
        m,
    ) {
        Ok(f) => f,
        Err(r) => return *r,
    };
    let d = gcd_all(
        a_list
            .iter()
            .copied()
            .chain(b_list.iter().map(|&b| b as i64))
            .chain([n as i64]),
    );
    let base = base.param("d", &d);
    let prods = shifted_products(a_list, b_list, n);
    let sign_m = alt(m);
    let mut lhs = BigRational::zero();
    for k in 0..n as usize {
        let fbar = &f[k + 1] - &sign_m * &f[k];
        lhs += fbar * rat(prods[k].clone());
    }
    let mut parts = vec![base.clone().param("claim", "mod d").divisible(&lhs, &d)];
    if kernel
        .require(KernelHypothesis::PowerDivides(2), n, m)
        .is_ok()
    {
        let sum_a: i64 = a_list.iter().sum();
        let mut tail = BigRational::zero();
        for k in 1..n as usize {
            tail += &f[k] / rat(k as u64) * rat(prods[k].clone());
        }
        let rhs = &sign_m * rat(sum_a) * tail;
        parts.push(base.param("claim", "mod d^2").congruence(&lhs, &rhs, &d, 2));
    }
    let mut out = combine("thm41", &["claim"], parts.clone());
    if parts.len() == 1 && out.passed() {
        out = out.note("k^2 does not divide f(k); only the mod d claim applies");
    }
    out
}

/// Both signs of `(+-1)^k (2k+1)` and `(+-1)^k (4k^3-1)` modulo `d`, the
/// alternating plain sum modulo `d`, and the two refinements modulo `d^2`,
/// all against `prod_i C(a_i - 1, b_i + k)`.
pub fn cor41_claims(n: u64, a_list: &[i64], b_list: &[u64]) -> Vec<CheckResult> {
    let base = lists_base("cor41", n, a_list, Some(b_list));
    if n == 0 || a_list.is_empty() || a_list.len() != b_list.len() {
        return vec![precondition(
            base,
            "need n >= 1 and nonempty a, b of equal length",
        )];
    }
    let m = a_list.len() as i64;
    let d = gcd_all(
        a_list
            .iter()
            .copied()
            .chain(b_list.iter().map(|&b| b as i64))
            .chain([n as i64]),
    );
    let base = base.param("d", &d);
    let prods: Vec<BigRational> = shifted_products(a_list, b_list, n)
        .into_iter()
        .map(rat)
        .collect();
    let weighted = |w: &dyn Fn(i64) -> BigRational| -> BigRational {
        prods.iter().enumerate().map(|(k, p)| w(k as i64) * p).sum()
    };
    let sum_a: i64 = a_list.iter().sum();
    let quotient = BigInt::from(sum_a) / &d;
    let gcd_factor = (quotient - BigInt::from(1)).gcd(&BigInt::from(2));
    let claim = |name: &str| base.clone().param("claim", name);
    let mut out = vec![claim("alternating").divisible(&weighted(&|k| alt(k * m)), &d)];
    for (sign, s) in [("+", 1i64), ("-", -1i64)] {
        let pm = |k: i64| if s == 1 { rat(1) } else { alt(k) };
        out.push(
            claim(&format!("{sign}odd")).divisible(&weighted(&|k| pm(k) * rat(2 * k + 1)), &d),
        );
        out.push(
            claim(&format!("{sign}cubic"))
                .divisible(&weighted(&|k| pm(k) * rat(4 * k * k * k - 1)), &d),
        );
    }
    let d2 = &d * &d;
    out.push(claim("odd mod d^2").param("factor", &gcd_factor).divisible(
        &(rat(gcd_factor.clone()) * weighted(&|k| alt(k * m) * rat(2 * k + 1))),
        &d2,
    ));
    out.push(claim("hex mod d^2").divisible(
        &(rat(6) * weighted(&|k| alt(k * m) * rat(3 * k * k + 3 * k + 1))),
        &d2,
    ));
    out
}

pub fn check_cor41(n: u64, a_list: &[i64], b_list: &[u64]) -> CheckResult {
    combine(
        "cor41",
        &["claim", "factor"],
        cor41_claims(n, a_list, b_list),
    )
}

/// `sum_{k<n} (f(k+1) - f(k)) prod_i C(a_i n - 1, k) C(-a_i n - 1, k)` is
/// congruent modulo `n^3` to `n^2 (sum a_i^2) sum_{0<k<n} f(k)/k^2 prod_i ...`,
/// for kernels with `k^3 | f(k)`.
pub fn check_thm42(n: u64, kernel: &KernelSpec, a_list: &[i64]) -> CheckResult {
    let base = lists_base("thm42", n, a_list, None).param("kernel", kernel);
    if n == 0 || a_list.is_empty() {
        return precondition(base, "need n >= 1 and nonempty a");
    }
    let m = a_list.len() as i64;
    let f = match kernel_or_ill_posed(
        base.clone(),
        kernel,
        KernelHypothesis::PowerDivides(3),
        n,
        m,
    ) {
        Ok(f) => f,
        Err(r) => return *r,
    };
    let prods = symmetric_products(a_list, n);
    let mut lhs = BigRational::zero();
    let mut tail = BigRational::zero();
    for k in 0..n as usize {
        let p = rat(prods[k].clone());
        lhs += (&f[k + 1] - &f[k]) * &p;
        if k > 0 {
            tail += &f[k] / rat((k * k) as u64) * p;
        }
    }
    let sum_sq: i64 = a_list.iter().map(|a| a * a).sum();
    let nn = rat(n * n);
    let rhs = nn * rat(sum_sq) * tail;
    base.congruence(&lhs, &rhs, &BigInt::from(n), 3)
}

/// Whether the result of [`check_thm43`] must be an integer or a multiple of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Integral,
    OverN,
}

impl Strength {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strength::Integral => "integral",
            Strength::OverN => "over_n",
        }
    }

    fn hypothesis(&self) -> KernelHypothesis {
        match self {
            Strength::Integral => KernelHypothesis::CentralIntegral,
            Strength::OverN => KernelHypothesis::CentralMultipleOfK,
        }
    }
}

impl std::str::FromStr for Strength {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integral" => Ok(Strength::Integral),
            "over_n" => Ok(Strength::OverN),
            _ => Err(Error::Precondition(format!("unknown strength '{s}'"))),
        }
    }
}

/// `sum_{k<n} (f(k+1) - f(k)) prod_i C(a_i n - 1, k) C(-a_i n - 1, k)`,
/// after checking the kernel hypothesis for `strength` on `k <= n`.
pub fn thm43_sum(
    n: u64,
    kernel: &KernelSpec,
    a_list: &[i64],
    strength: Strength,
) -> Result<BigRational> {
    let m = a_list.len() as i64;
    kernel.require(strength.hypothesis(), n, m)?;
    let f = kernel.values(n, m)?;
    let prods = symmetric_products(a_list, n);
    Ok((0..n as usize)
        .map(|k| (&f[k + 1] - &f[k]) * rat(prods[k].clone()))
        .sum())
}

/// `k / C(2k-1, k) C(n,k) C(-n,k) = 0 (mod n)` for every `k <= n`.
pub fn check_lemma41(n: u64) -> CheckResult {
    let base = CheckResult::new("lemma41").param("n", n);
    let nb = BigInt::from(n);
    let ni = n as i64;
    let rows = BinomialRow::new(ni).zip(BinomialRow::new(-ni));
    let mut last = base.clone().divisible(&BigRational::zero(), &nb);
    for (k, (up, down)) in rows.take(n as usize + 1).enumerate() {
        let k = k as u64;
        let central = if k == 0 {
            BigInt::from(1)
        } else {
            binomial_i(2 * k as i64 - 1, k)
        };
        let value = BigRational::new(BigInt::from(k) * up * down, central);
        last = base.clone().divisible(&value, &nb);
        if !last.passed() {
            return last.param("k", k);
        }
    }
    last
}

/// The kernel sum over `prod_i C(a_i n - 1, k) C(-a_i n - 1, k)` is an
/// integer (`Integral`) or a multiple of `n` (`OverN`), given
/// `min a_i = 1`. The divisibility of `k C(n,k) C(-n,k) / C(2k-1,k)` by `n`
/// is checked alongside.
pub fn check_thm43(n: u64, kernel: &KernelSpec, a_list: &[i64], strength: Strength) -> CheckResult {
    let base = lists_base("thm43", n, a_list, None)
        .param("kernel", kernel)
        .param("strength", strength.as_str());
    if n == 0 || a_list.iter().min() != Some(&1) {
        return precondition(base, "need n >= 1 and min(a) = 1");
    }
    let sum = match thm43_sum(n, kernel, a_list, strength) {
        Ok(s) => s,
        Err(e) => return base.ill_posed(e),
    };
    let main = match strength {
        Strength::Integral => base.integral(&sum),
        Strength::OverN => base.divisible(&sum, &BigInt::from(n)),
    };
    main.and(check_lemma41(n))
}

/// `sum_{k<n} (f(k+1) - (-1)^(a+b) f(k)) C(n-1,k)^a C(-n-1,k)^b`, after
/// checking `C(2k-1,k) f(k)` is integral on `k <= n`.
pub fn thm44_sum(n: u64, a: u32, b: u32, kernel: &KernelSpec) -> Result<BigRational> {
    let m = (a + b) as i64;
    kernel.require(KernelHypothesis::CentralIntegral, n, m)?;
    let f = kernel.values(n, m)?;
    let sign = alt(m);
    let ni = n as i64;
    let rows = BinomialRow::new(ni - 1).zip(BinomialRow::new(-ni - 1));
    Ok(rows
        .take(n as usize)
        .enumerate()
        .map(|(k, (u, d))| {
            let w = num_traits::pow(u, a as usize) * num_traits::pow(d, b as usize);
            (&f[k + 1] - &sign * &f[k]) * rat(w)
        })
        .sum())
}

pub fn check_thm44(n: u64, a: u32, b: u32, kernel: &KernelSpec) -> CheckResult {
    let base = CheckResult::new("thm44")
        .param("n", n)
        .param("a", a)
        .param("b", b)
        .param("kernel", kernel);
    if n == 0 || a == 0 || b == 0 {
        return precondition(base, "need n, a, b >= 1");
    }
    match thm44_sum(n, a, b, kernel) {
        Ok(s) => base.integral(&s),
        Err(e) => base.ill_posed(e),
    }
}

/// `(1/n^2) sum_{k<n} (2k+1) A_k = sum_{k<n} a_k/(2k+1) C(n-1,k)^2 C(n+k,k)^2`
/// with `A_k = sum_{j<=k} C(k,j)^2 C(k+j,j)^2 a_j`.
pub fn check_lemma42(n: u64, a_seq: &[BigRational]) -> CheckResult {
    let base = CheckResult::new("lemma42")
        .param("n", n)
        .param("a", render_list(a_seq));
    if n == 0 || (a_seq.len() as u64) < n {
        return precondition(base, "need n >= 1 and at least n terms");
    }
    let mut lhs = BigRational::zero();
    for k in 0..n {
        let mut tilde = BigRational::zero();
        let row = BinomialRow::new(k);
        for (j, c) in row.take(k as usize + 1).enumerate() {
            let t = c * binomial_i((k + j as u64) as i64, j as u64);
            tilde += rat(&t * &t) * &a_seq[j];
        }
        lhs += rat(2 * k + 1) * tilde;
    }
    lhs /= rat(n * n);
    let mut rhs = BigRational::zero();
    for (k, c) in BinomialRow::new(n - 1).take(n as usize).enumerate() {
        let t = c * binomial_i((n + k as u64) as i64, k as u64);
        rhs += &a_seq[k] / rat(2 * k as u64 + 1) * rat(&t * &t);
    }
    base.equal(&lhs, &rhs)
}

/// Sum of a rational weight against a list of integers.
pub(crate) fn weighted_sum(values: &[BigInt], w: impl Fn(i64) -> BigRational) -> BigRational {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| w(k as i64) * rat(v.clone()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use crate::verify::{named_kernel, paper_kernels, Status};

    fn kernel(s: &str) -> KernelSpec {
        s.parse().unwrap()
    }

    #[test]
    fn products_match_direct_binomials() {
        let p = shifted_products(&[4, -2], &[1, 0], 5);
        for (k, v) in p.iter().enumerate() {
            let k = k as u64;
            assert_eq!(*v, binomial_i(3, 1 + k) * binomial_i(-3, k));
        }
        let s = symmetric_products(&[2], 3);
        assert_eq!(s[1], binomial_i(5, 1) * binomial_i(-7, 1));
    }

    #[test]
    fn thm41_examples() {
        let k2 = named_kernel("k2").unwrap();
        let k3 = named_kernel("k3").unwrap();
        let k1 = named_kernel("k").unwrap();
        assert!(check_thm41(4, &k2, &[4], &[0]).passed());
        let r = check_thm41(2, &k3, &[2], &[2]);
        assert!(r.passed(), "{r:?}");
        assert!(check_thm41(3, &k1, &[3, 3], &[0, 0]).passed());
        // f(k) = 1 is not divisible by k.
        let r = check_thm41(3, &kernel("none:1/1"), &[3], &[0]);
        assert_eq!(r.status, Status::IllPosed);
    }

    #[test]
    fn thm41_refinement_needs_square_kernel() {
        let k1 = named_kernel("k").unwrap();
        let r = check_thm41(4, &k1, &[4], &[0]);
        assert!(r.note.unwrap().contains("only the mod d claim"));
    }

    #[test]
    fn cor41_examples() {
        let c = cor41_claims(4, &[2], &[0]);
        assert_eq!(c.len(), 7);
        assert!(c[0].passed());
        assert_eq!(c[0].lhs, "0");
        assert!(check_cor41(3, &[3], &[3]).passed());
        assert!(check_cor41(4, &[4], &[0]).passed());
        for n in 1..=12 {
            for a in -4..=4 {
                for b in 0..=3 {
                    let r = check_cor41(n, &[a, 2 * a], &[b, 0]);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn thm42_examples() {
        let k3 = named_kernel("k3").unwrap();
        let r = check_thm42(2, &k3, &[1]);
        assert!(r.passed());
        // LHS -20 and RHS -12 differ by -8.
        assert_eq!(r.lhs, "4");
        assert_eq!(r.rhs, "4");
        assert!(check_thm42(3, &k3, &[1, 2]).passed());
        assert!(check_thm42(2, &named_kernel("k3_k_minus_1").unwrap(), &[1]).passed());
        assert_eq!(
            check_thm42(3, &named_kernel("k2").unwrap(), &[1]).status,
            Status::IllPosed
        );
    }

    #[test]
    fn thm43_examples() {
        let f = paper_kernels();
        assert!(check_thm43(3, &f[0], &[1], Strength::OverN).passed());
        assert!(check_thm43(2, &f[2], &[1, 2], Strength::OverN).passed());
        assert!(check_thm43(4, &kernel("none:1/-1,2"), &[1], Strength::Integral).passed());
        assert_eq!(
            check_thm43(4, &f[0], &[2], Strength::OverN).status,
            Status::IllPosed
        );
        // 1/(2k-1) has f(0) = -1, so it cannot satisfy the over-n hypothesis.
        assert_eq!(
            check_thm43(4, &kernel("none:1/-1,2"), &[1], Strength::OverN).status,
            Status::IllPosed
        );
    }

    #[test]
    fn thm43_first_sum_matches_direct() {
        // Delta f_1(k) = -1/(4k^2-1).
        let s = thm43_sum(3, &paper_kernels()[0], &[1], Strength::OverN).unwrap();
        let direct: BigRational = symmetric_products(&[1], 3)
            .into_iter()
            .enumerate()
            .map(|(k, p)| -rat(p) / rat(4 * (k * k) as i64 - 1))
            .sum();
        assert_eq!(s, direct);
    }

    #[test]
    fn lemma41_holds() {
        for n in 1..=60 {
            assert!(check_lemma41(n).passed(), "n={n}");
        }
    }

    #[test]
    fn thm44_examples() {
        let f = paper_kernels();
        assert!(check_thm44(3, 1, 2, &f[4]).passed());
        assert!(check_thm44(2, 1, 1, &f[8]).passed());
        assert!(check_thm44(4, 2, 1, &f[9]).passed());
        for n in 1..=15 {
            for a in 1..=3 {
                for b in 1..=3 {
                    for k in &f[4..] {
                        assert!(check_thm44(n, a, b, k).passed());
                    }
                }
            }
        }
    }

    #[test]
    fn lemma42_examples() {
        let odd: Vec<BigRational> = (0..5).map(|k| rat(2 * k + 1)).collect();
        let r = check_lemma42(2, &odd);
        assert!(r.passed());
        assert_eq!(r.lhs, "10");
        let zeros = vec![BigRational::zero(); 4];
        assert!(check_lemma42(4, &zeros).passed());
        let inv: Vec<BigRational> = (0..3).map(|k| ratio(1, 2 * k - 1)).collect();
        assert!(check_lemma42(3, &inv).passed());
        assert_eq!(check_lemma42(5, &inv).status, Status::IllPosed);
    }

    #[test]
    fn weighted_sum_applies_weights() {
        assert_eq!(
            weighted_sum(&[BigInt::from(2), BigInt::from(3)], |k| rat(k + 1)),
            rat(8)
        );
    }
}
