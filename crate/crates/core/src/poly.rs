//! Dense univariate polynomials over `Z` and `Q`.
//!
//! The same representation serves x-polynomials and q-polynomials; the
//! variable is contextual. Coefficients are stored low-to-high and trailing
//! zeros are always pruned, so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, if all are divisible.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact value at a rational point, via a homogenized Horner scheme so
    /// only one reduction happens at the end.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let Some(deg) = self.degree() else {
            return BigRational::zero();
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        // bpow is now b^(deg+1); the homogenized sum carries b^deg.
        let den = num_traits::pow(b.clone(), deg);
        BigRational::new(acc, den)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Division by a divisor whose leading coefficient is `+1` or `-1`;
    /// quotient and remainder stay integral.
    pub fn divrem_unit_leading(&self, b: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let lead = b.leading().ok_or(Error::ZeroDivisor)?;
        if !(lead.is_one() || (-lead).is_one()) {
            return Err(Error::Precondition(
                "divisor must have leading coefficient +1 or -1".into(),
            ));
        }
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let negate = lead.is_negative();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - db;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[i + db]);
            if c.is_zero() {
                continue;
            }
            let c = if negate { -c } else { c };
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                if !bj.is_zero() {
                    rem[i + j] -= &c * bj;
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Remainder modulo a unit-leading divisor.
    pub fn rem_unit_leading(&self, b: &IntPolynomial) -> Result<IntPolynomial> {
        self.divrem_unit_leading(b).map(|(_, r)| r)
    }
}

// Below this many coefficients schoolbook multiplication wins.
const KRONECKER_THRESHOLD: usize = 24;

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn split_signs(a: &[BigInt]) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut pos = Vec::with_capacity(a.len());
    let mut neg = Vec::with_capacity(a.len());
    for c in a {
        match c.sign() {
            Sign::Minus => {
                pos.push(BigUint::zero());
                neg.push(c.magnitude().clone());
            }
            _ => {
                pos.push(c.magnitude().clone());
                neg.push(BigUint::zero());
            }
        }
    }
    (pos, neg)
}

fn max_bits(a: &[BigUint]) -> u64 {
    a.iter().map(|c| c.bits()).max().unwrap_or(0)
}

/// Packs `a` into one integer with `words` 32-bit digits per coefficient.
fn pack(a: &[BigUint], words: usize) -> BigUint {
    let mut digits = vec![0u32; a.len() * words];
    for (i, c) in a.iter().enumerate() {
        for (j, d) in c.to_u32_digits().into_iter().enumerate() {
            digits[i * words + j] = d;
        }
    }
    BigUint::new(digits)
}

fn unpack(v: &BigUint, words: usize, len: usize) -> Vec<BigUint> {
    let digits = v.to_u32_digits();
    (0..len)
        .map(|i| {
            let lo = (i * words).min(digits.len());
            let hi = ((i + 1) * words).min(digits.len());
            BigUint::from_slice(&digits[lo..hi])
        })
        .collect()
}

/// Product of non-negative coefficient vectors by Kronecker substitution.
fn kronecker_unsigned(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let len = a.len() + b.len() - 1;
    let (ba, bb) = (max_bits(a), max_bits(b));
    if ba == 0 || bb == 0 {
        return vec![BigUint::zero(); len];
    }
    let terms = a.len().min(b.len()) as u64;
    let bits = ba + bb + (64 - terms.leading_zeros() as u64) + 1;
    let words = bits.div_ceil(32) as usize;
    let prod = pack(a, words) * pack(b, words);
    unpack(&prod, words, len)
}

fn kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (ap, an) = split_signs(a);
    let (bp, bn) = split_signs(b);
    let a_has_neg = an.iter().any(|c| !c.is_zero());
    let b_has_neg = bn.iter().any(|c| !c.is_zero());
    let len = a.len() + b.len() - 1;
    let mut out = vec![BigInt::zero(); len];
    let mut accumulate = |part: Vec<BigUint>, sign: Sign| {
        for (o, c) in out.iter_mut().zip(part) {
            if !c.is_zero() {
                *o += BigInt::from_biguint(sign, c);
            }
        }
    };
    accumulate(kronecker_unsigned(&ap, &bp), Sign::Plus);
    if a_has_neg && b_has_neg {
        accumulate(kronecker_unsigned(&an, &bn), Sign::Plus);
    }
    if b_has_neg {
        accumulate(kronecker_unsigned(&ap, &bn), Sign::Minus);
    }
    if a_has_neg {
        accumulate(kronecker_unsigned(&an, &bp), Sign::Minus);
    }
    out
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let (a, b) = (&self.coeffs, &rhs.coeffs);
        let out = if a.len().min(b.len()) < KRONECKER_THRESHOLD {
            schoolbook(a, b)
        } else {
            kronecker(a, b)
        };
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        trim(&mut self.coeffs);
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        trim(&mut self.coeffs);
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

fn write_terms<T: fmt::Display + Zero>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{c}")?,
            1 => write!(f, "({c}){var}")?,
            _ => write!(f, "({c}){var}^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The integer polynomial with the same coefficients, if all are integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// Clears denominators: returns `(d, P)` with `self = P / d`.
    pub fn clear_denominators(&self) -> (BigInt, IntPolynomial) {
        let d = self.denominator_lcm();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        (d, IntPolynomial::new(coeffs))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let (da, a) = self.clear_denominators();
        let (db, b) = rhs.clear_denominators();
        let p = &a * &b;
        let den = BigRational::from_integer(da * db);
        RationalPolynomial::new(
            p.coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c) / &den)
                .collect(),
        )
    }

    /// Long division over `Q`.
    pub fn divrem(
        &self,
        b: &RationalPolynomial,
    ) -> Result<(RationalPolynomial, RationalPolynomial)> {
        let lead = b.coeffs.last().ok_or(Error::ZeroDivisor)?.clone();
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((RationalPolynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - db;
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[i + db]);
            if c.is_zero() {
                continue;
            }
            let c = c / &lead;
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                if !bj.is_zero() {
                    rem[i + j] -= &c * bj;
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((RationalPolynomial::new(quot), RationalPolynomial::new(rem)))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}

impl From<&IntPolynomial> for RationalPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        p.to_rational()
    }
}

/// Quotient and remainder of `a / b` over `Q`.
pub fn poly_divrem(
    a: &IntPolynomial,
    b: &IntPolynomial,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    if b.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    a.to_rational().divrem(&b.to_rational())
}

/// True iff `b` divides `a` in `Z[var]`.
pub fn divides_in_zq(b: &IntPolynomial, a: &IntPolynomial) -> Result<bool> {
    let lead = b.leading().ok_or(Error::ZeroDivisor)?;
    if lead.is_one() || (-lead).is_one() {
        return Ok(a.rem_unit_leading(b)?.is_zero());
    }
    let (q, r) = poly_divrem(a, b)?;
    Ok(r.is_zero() && q.to_integer().is_some())
}

/// Gcd over `Q`, returned as a primitive integer polynomial with positive
/// leading coefficient (zero if both inputs are zero).
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut x = a.to_rational();
    let mut y = b.to_rational();
    while !y.is_zero() {
        let (_, r) = x.divrem(&y).expect("nonzero divisor");
        x = y;
        // Keep coefficients small by passing through primitive integer form.
        let (_, ri) = r.clear_denominators();
        y = primitive(&ri).to_rational();
    }
    let (_, xi) = x.clear_denominators();
    primitive(&xi)
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    let mut c = p.content();
    if p.leading().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    p.div_exact_scalar(&c).expect("content divides")
}
