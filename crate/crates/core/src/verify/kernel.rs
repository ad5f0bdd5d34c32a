//! Rational kernels `f(k)` for the summation theorems, stored as data.
//!
//! A kernel is `(-1)^{e(k,m)} · num(k) / den(k)` where `num` is an integer
//! polynomial in `k`, `den` is either a polynomial in `k` or `C(2k-1, k)`,
//! and the sign exponent `e` is one of `0`, `k`, `km`, `k(m-1)`.
//!
//! Textual form (used by the CLI): `[sign:]num/den` with `sign` one of
//! `none`, `k`, `km`, `km1`, `num` a comma-separated coefficient list
//! (low to high degree) and `den` either such a list or `central`.
//! Example: `k:0,1/-1,2` is `(-1)^k k/(2k-1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::binomial_i;
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignExponent {
    None,
    K,
    KM,
    KMMinus1,
}

impl SignExponent {
    /// Parity of the exponent at `(k, m)`; `m` may be negative or zero.
    fn odd(self, k: u64, m: i64) -> bool {
        let k = k as i64;
        match self {
            SignExponent::None => false,
            SignExponent::K => k % 2 != 0,
            SignExponent::KM => (k * m).rem_euclid(2) == 1,
            SignExponent::KMMinus1 => (k * (m - 1)).rem_euclid(2) == 1,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            SignExponent::None => "none",
            SignExponent::K => "k",
            SignExponent::KM => "km",
            SignExponent::KMMinus1 => "km1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelDenominator {
    Poly(IntPolynomial),
    /// `C(2k-1, k)`, which is `1` at `k = 0`.
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSpec {
    pub name: String,
    pub sign_exponent: SignExponent,
    pub numerator: IntPolynomial,
    pub denominator: KernelDenominator,
}

/// Divisibility profile a theorem asks of its kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelHypothesis {
    /// Integer-valued with `k^j | f(k)` (so `f(0) = 0`).
    PowerDivides(u32),
    /// `C(2k-1, k) f(k)` is an integer.
    CentralIntegral,
    /// `C(2k-1, k) f(k)` is a multiple of `k` (so `f(0) = 0`).
    CentralMultipleOfK,
}

impl KernelSpec {
    pub fn new(
        name: &str,
        sign_exponent: SignExponent,
        numerator: IntPolynomial,
        denominator: KernelDenominator,
    ) -> Self {
        KernelSpec {
            name: name.to_string(),
            sign_exponent,
            numerator,
            denominator,
        }
    }

    /// `f(k)` with sign parameter `m`.
    pub fn eval(&self, k: u64, m: i64) -> Result<BigRational> {
        let kk = BigInt::from(k);
        let num = self.numerator.eval_int(&kk);
        let den = match &self.denominator {
            KernelDenominator::Poly(p) => p.eval_int(&kk),
            KernelDenominator::Central => central_denominator(k),
        };
        if den.is_zero() {
            return Err(Error::KernelViolation {
                kernel: self.name.clone(),
                k,
                reason: "denominator vanishes".into(),
            });
        }
        let v = BigRational::new(num, den);
        Ok(if self.sign_exponent.odd(k, m) { -v } else { v })
    }

    /// Values `f(0), ..., f(upto)`.
    pub fn values(&self, upto: u64, m: i64) -> Result<Vec<BigRational>> {
        (0..=upto).map(|k| self.eval(k, m)).collect()
    }

    /// Asserts `hyp` on `k = 0..=upto`.
    pub fn require(&self, hyp: KernelHypothesis, upto: u64, m: i64) -> Result<()> {
        for k in 0..=upto {
            let f = self.eval(k, m)?;
            let violation = |reason: String| Error::KernelViolation {
                kernel: self.name.clone(),
                k,
                reason,
            };
            match hyp {
                KernelHypothesis::PowerDivides(j) => {
                    if !f.is_integer() {
                        return Err(violation(format!("f(k) = {f} is not an integer")));
                    }
                    let v = f.to_integer();
                    let ok = if k == 0 {
                        v.is_zero()
                    } else {
                        v.is_multiple_of(&num_traits::pow(BigInt::from(k), j as usize))
                    };
                    if !ok {
                        return Err(violation(format!("k^{j} does not divide f(k) = {v}")));
                    }
                }
                KernelHypothesis::CentralIntegral => {
                    let g = &f * BigRational::from_integer(central_denominator(k));
                    if !g.is_integer() {
                        return Err(violation(format!("C(2k-1,k) f(k) = {g} is not an integer")));
                    }
                }
                KernelHypothesis::CentralMultipleOfK => {
                    let g = &f * BigRational::from_integer(central_denominator(k));
                    let ok = g.is_integer()
                        && if k == 0 {
                            g.is_zero()
                        } else {
                            g.to_integer().is_multiple_of(&BigInt::from(k))
                        };
                    if !ok {
                        return Err(violation(format!("C(2k-1,k) f(k) = {g} is not in kZ")));
                    }
                }
            }
        }
        Ok(())
    }
}

fn central_denominator(k: u64) -> BigInt {
    if k == 0 {
        BigInt::one()
    } else {
        binomial_i(2 * k as i64 - 1, k)
    }
}

fn render_coeffs(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = match &self.denominator {
            KernelDenominator::Poly(p) => render_coeffs(p),
            KernelDenominator::Central => "central".into(),
        };
        write!(
            f,
            "{}:{}/{}",
            self.sign_exponent.tag(),
            render_coeffs(&self.numerator),
            den
        )
    }
}

fn parse_coeffs(s: &str) -> Result<IntPolynomial> {
    let coeffs: std::result::Result<Vec<BigInt>, _> =
        s.split(',').map(|c| c.trim().parse::<BigInt>()).collect();
    coeffs
        .map(IntPolynomial::new)
        .map_err(|_| Error::Precondition(format!("bad coefficient list '{s}'")))
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(k) = named_kernel(s) {
            return Ok(k);
        }
        let (sign, rest) = match s.split_once(':') {
            Some((tag, rest)) => {
                let sign = match tag.trim() {
                    "none" => SignExponent::None,
                    "k" => SignExponent::K,
                    "km" => SignExponent::KM,
                    "km1" => SignExponent::KMMinus1,
                    other => return Err(Error::Precondition(format!("unknown sign '{other}'"))),
                };
                (sign, rest)
            }
            None => (SignExponent::None, s),
        };
        let (num, den) = rest
            .split_once('/')
            .ok_or_else(|| Error::Precondition(format!("kernel '{s}' needs num/den")))?;
        let denominator = if den.trim() == "central" {
            KernelDenominator::Central
        } else {
            let p = parse_coeffs(den)?;
            if p.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            KernelDenominator::Poly(p)
        };
        Ok(KernelSpec::new(s, sign, parse_coeffs(num)?, denominator))
    }
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn den(c: &[i64]) -> KernelDenominator {
    KernelDenominator::Poly(poly(c))
}

/// The ten kernels behind the second half of the binomial-sum theorem:
/// `f1..f4` feed the over-`n` integrality test, `f5..f10` the mixed-exponent one.
pub fn paper_kernels() -> Vec<KernelSpec> {
    use SignExponent::*;
    vec![
        KernelSpec::new("f1", None, poly(&[0, 1]), den(&[-1, 2])),
        KernelSpec::new("f2", K, poly(&[0, 1]), den(&[-1, 2])),
        KernelSpec::new("f3", None, poly(&[0, 2]), den(&[1, 1])),
        KernelSpec::new("f4", K, poly(&[0, 2]), den(&[1, 1])),
        KernelSpec::new("f5", KM, poly(&[1]), den(&[-1, 2])),
        KernelSpec::new("f6", KMMinus1, poly(&[1]), den(&[-1, 2])),
        KernelSpec::new("f7", KM, poly(&[2]), den(&[1, 1])),
        KernelSpec::new("f8", KMMinus1, poly(&[2]), den(&[1, 1])),
        KernelSpec::new("f9", KM, poly(&[1]), KernelDenominator::Central),
        KernelSpec::new("f10", KMMinus1, poly(&[1]), KernelDenominator::Central),
    ]
}

/// Integer kernels with `k^j | f(k)` used to exercise the summation theorems.
pub fn power_kernels() -> Vec<KernelSpec> {
    use SignExponent::*;
    vec![
        KernelSpec::new("k", None, poly(&[0, 1]), den(&[1])),
        KernelSpec::new("k2", None, poly(&[0, 0, 1]), den(&[1])),
        KernelSpec::new("k3", None, poly(&[0, 0, 0, 1]), den(&[1])),
        KernelSpec::new("alt_k2", KM, poly(&[0, 0, 1]), den(&[1])),
        KernelSpec::new("alt_k3", KM, poly(&[0, 0, 0, 1]), den(&[1])),
        KernelSpec::new("k3_k_minus_1", None, poly(&[0, 0, 0, -1, 1]), den(&[1])),
        KernelSpec::new("k2_2k_minus_3_alt", K, poly(&[0, 0, 3, -2]), den(&[1])),
        KernelSpec::new("k_plus_k2", K, poly(&[0, 1, 1]), den(&[1])),
    ]
}

/// Looks a kernel up by name in both registries.
pub fn named_kernel(name: &str) -> Option<KernelSpec> {
    paper_kernels()
        .into_iter()
        .chain(power_kernels())
        .find(|k| k.name == name)
}
