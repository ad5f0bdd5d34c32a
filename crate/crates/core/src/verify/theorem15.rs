//! Direct checkers for the weighted sums over `C(a n - 1, k)` products and
//! over `C(n-1,k)^a C(-n-1,k)^b`, plus a cross-check of the latter against
//! the kernel framework.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;

use super::framework::{symmetric_products, thm43_sum, thm44_sum, weighted_sum, Strength};
use super::{combine, paper_kernels, render_list, CheckResult};
use crate::error::Error;
use crate::exactnum::{central_binomial, rat, BinomialRow};

fn alt(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn pow(self, k: i64) -> BigRational {
        match self {
            Sign::Plus => rat(1),
            Sign::Minus => alt(k),
        }
    }
}

/// The sums over `prod_i C(a_i n - 1, k)` (and, for the symmetric ones,
/// `C(-a_i n - 1, k)` as well), each with its weight and modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductVariant {
    /// `(+-1)^k (2k+1)` modulo `n`.
    Odd(Sign),
    /// `(+-1)^k (4k^3-1)` modulo `n`.
    Cubic(Sign),
    /// `gcd(sum a_i - 1, 2) (-1)^(km) (2k+1)` modulo `n^2`.
    OddSquare,
    /// `6 (-1)^(km) (3k^2+3k+1)` modulo `n^2`.
    HexSquare,
    /// `(-1)^k (4k^3-1)` over symmetric products, modulo `n^2`.
    CubicSymmetric,
    /// `gcd(sum a_i - 1, 2) (3k^2+3k+1)` over symmetric products, modulo `n^3`.
    HexSymmetricCube,
}

impl ProductVariant {
    pub const ALL: [ProductVariant; 8] = [
        ProductVariant::Odd(Sign::Plus),
        ProductVariant::Odd(Sign::Minus),
        ProductVariant::Cubic(Sign::Plus),
        ProductVariant::Cubic(Sign::Minus),
        ProductVariant::OddSquare,
        ProductVariant::HexSquare,
        ProductVariant::CubicSymmetric,
        ProductVariant::HexSymmetricCube,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProductVariant::Odd(Sign::Plus) => "odd+",
            ProductVariant::Odd(Sign::Minus) => "odd-",
            ProductVariant::Cubic(Sign::Plus) => "cubic+",
            ProductVariant::Cubic(Sign::Minus) => "cubic-",
            ProductVariant::OddSquare => "odd_sq",
            ProductVariant::HexSquare => "hex_sq",
            ProductVariant::CubicSymmetric => "cubic_sym",
            ProductVariant::HexSymmetricCube => "hex_sym",
        }
    }
}

impl fmt::Display for ProductVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ProductVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown variant '{s}'")))
    }
}

/// `prod_i C(a_i n - 1, k)` for `k < n`.
fn plain_products(a_list: &[i64], n: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1); n as usize];
    for &a in a_list {
        let row = BinomialRow::new(a * n as i64 - 1);
        for (acc, c) in out.iter_mut().zip(row) {
            *acc *= c;
        }
    }
    out
}

pub fn check_thm15_i(n: u64, a_list: &[i64], variant: ProductVariant) -> CheckResult {
    let base = CheckResult::new("thm15_i")
        .param("n", n)
        .param("a", render_list(a_list))
        .param("variant", variant);
    if n == 0 || a_list.is_empty() {
        return base.ill_posed(Error::Precondition("need n >= 1 and nonempty a".into()));
    }
    let m = a_list.len() as i64;
    let nb = BigInt::from(n);
    let n2 = &nb * &nb;
    let parity = BigInt::from(a_list.iter().sum::<i64>() - 1).gcd(&BigInt::from(2));
    let odd = |k: i64| rat(2 * k + 1);
    let cubic = |k: i64| rat(4 * k * k * k - 1);
    let hex = |k: i64| rat(3 * k * k + 3 * k + 1);
    let (value, modulus) = match variant {
        ProductVariant::Odd(s) => (
            weighted_sum(&plain_products(a_list, n), |k| s.pow(k) * odd(k)),
            nb,
        ),
        ProductVariant::Cubic(s) => (
            weighted_sum(&plain_products(a_list, n), |k| s.pow(k) * cubic(k)),
            nb,
        ),
        ProductVariant::OddSquare => (
            rat(parity.clone()) * weighted_sum(&plain_products(a_list, n), |k| alt(k * m) * odd(k)),
            n2,
        ),
        ProductVariant::HexSquare => (
            rat(6) * weighted_sum(&plain_products(a_list, n), |k| alt(k * m) * hex(k)),
            n2,
        ),
        ProductVariant::CubicSymmetric => (
            weighted_sum(&symmetric_products(a_list, n), |k| alt(k) * cubic(k)),
            n2,
        ),
        ProductVariant::HexSymmetricCube => (
            rat(parity.clone()) * weighted_sum(&symmetric_products(a_list, n), hex),
            n2 * BigInt::from(n),
        ),
    };
    let base = match variant {
        ProductVariant::OddSquare | ProductVariant::HexSymmetricCube => {
            base.param("factor", parity)
        }
        _ => base,
    };
    base.divisible(&value, &modulus)
}

/// Weights of the sums over `C(n-1,k)^a C(-n-1,k)^b`, in display order.
/// The first four use `b = a` and are divided by `n`; the next six must be
/// integers; the last is a congruence modulo `n^2`.
pub const PAIR_WEIGHTS: [&str; 11] = [
    "1/(4k^2-1) over n",
    "1/C(k+2,2) over n",
    "(-1)^k(1+2k/(4k^2-1)) over n",
    "(-1)^k(4-(2k+3)/C(k+2,2)) over n",
    "1/(4k^2-1)",
    "k/(4k^2-1)",
    "1/C(k+2,2)",
    "(2k+3)/C(k+2,2)",
    "(3k+1)/((2k+1)C(2k,k))",
    "(5k+3)/((2k+1)C(2k,k))",
    "(2k+1) mod n^2",
];

fn pair_terms(n: u64, a: u32, b: u32) -> Vec<BigInt> {
    let ni = n as i64;
    BinomialRow::new(ni - 1)
        .zip(BinomialRow::new(-ni - 1))
        .take(n as usize)
        .map(|(u, d)| num_traits::pow(u, a as usize) * num_traits::pow(d, b as usize))
        .collect()
}

/// The eleven raw sums (before dividing by `n` or reducing), with the
/// sign factors `(-1)^((a+b)k)` and `(-1)^((a+b-1)k)` applied.
pub fn thm15_ii_sums(n: u64, a: u32, b: u32) -> Vec<BigRational> {
    let sym = pair_terms(n, a, a);
    let mixed = pair_terms(n, a, b);
    let m = (a + b) as i64;
    let inv_odd = |k: i64| rat(1) / rat(4 * k * k - 1);
    let inv_tri = |k: i64| rat(2) / rat((k + 1) * (k + 2));
    let inv_central = |k: i64| rat(1) / rat(BigInt::from(2 * k + 1) * central_binomial(k as u64));
    let even = |k: i64| alt(k * m);
    let odd = |k: i64| alt(k * (m - 1));
    let parity = BigInt::from(m - 1).gcd(&BigInt::from(2));
    vec![
        weighted_sum(&sym, inv_odd),
        weighted_sum(&sym, inv_tri),
        weighted_sum(&sym, |k| alt(k) * (rat(1) + rat(2 * k) * inv_odd(k))),
        weighted_sum(&sym, |k| alt(k) * (rat(4) - rat(2 * k + 3) * inv_tri(k))),
        weighted_sum(&mixed, |k| even(k) * inv_odd(k)),
        weighted_sum(&mixed, |k| odd(k) * rat(k) * inv_odd(k)),
        weighted_sum(&mixed, |k| even(k) * inv_tri(k)),
        weighted_sum(&mixed, |k| odd(k) * rat(2 * k + 3) * inv_tri(k)),
        weighted_sum(&mixed, |k| even(k) * rat(3 * k + 1) * inv_central(k)),
        weighted_sum(&mixed, |k| odd(k) * rat(5 * k + 3) * inv_central(k)),
        rat(parity) * weighted_sum(&mixed, |k| even(k) * rat(2 * k + 1)),
    ]
}

pub fn thm15_ii_claims(n: u64, a: u32, b: u32) -> Vec<CheckResult> {
    let base = CheckResult::new("thm15_ii")
        .param("n", n)
        .param("a", a)
        .param("b", b);
    if n == 0 || a == 0 || b == 0 {
        return vec![base.ill_posed(Error::Precondition("need n, a, b >= 1".into()))];
    }
    let nb = BigInt::from(n);
    thm15_ii_sums(n, a, b)
        .into_iter()
        .zip(PAIR_WEIGHTS)
        .enumerate()
        .map(|(i, (sum, weight))| {
            let r = base.clone().param("weight", weight);
            match i {
                0..=3 => r.divisible(&sum, &nb),
                4..=9 => r.integral(&sum),
                _ => r.divisible(&sum, &(&nb * &nb)),
            }
        })
        .collect()
}

pub fn check_thm15_ii(n: u64, a: u32, b: u32) -> CheckResult {
    combine("thm15_ii", &["weight"], thm15_ii_claims(n, a, b))
}

/// Recomputes the first ten sums of [`thm15_ii_sums`] through the kernel
/// framework with the ten named kernels and compares them exactly.
pub fn check_thm15_cross(n: u64, a: u32, b: u32) -> CheckResult {
    let base = CheckResult::new("thm15_cross")
        .param("n", n)
        .param("a", a)
        .param("b", b);
    if n == 0 || a == 0 || b == 0 {
        return base.ill_posed(Error::Precondition("need n, a, b >= 1".into()));
    }
    let direct = thm15_ii_sums(n, a, b);
    let f = paper_kernels();
    let ones = vec![1i64; a as usize];
    let m = (a + b) as i64;
    // Each kernel sum is a fixed multiple of the direct sum.
    let scales = [
        rat(-1),
        rat(1),
        rat(-1),
        rat(-1),
        rat(-2) * alt(m),
        rat(4) * alt(m - 1),
        -alt(m),
        alt(m - 1),
        -alt(m),
        alt(m - 1),
    ];
    // For the two central kernels the closed form of f(k+1) - (-1)^m f(k)
    // is off at k = 0 (it treats C(-1,0) as 1/2); the k = 0 product is 1.
    let offsets = |i: usize| if i >= 8 { alt(m) } else { rat(0) };
    // The second and third weights come from f3 and f2 respectively.
    let kernel_index = [0, 2, 1, 3, 4, 5, 6, 7, 8, 9];
    let mut parts = Vec::with_capacity(10);
    for (i, &j) in kernel_index.iter().enumerate() {
        let r = base
            .clone()
            .param("weight", PAIR_WEIGHTS[i])
            .param("kernel", &f[j].name);
        let kernel_sum = if i < 4 {
            thm43_sum(n, &f[j], &ones, Strength::OverN)
        } else {
            thm44_sum(n, a, b, &f[j])
        };
        parts.push(match kernel_sum {
            Ok(s) => r.equal(&s, &(&scales[i] * &direct[i] + offsets(i))),
            Err(e) => r.ill_posed(e),
        });
    }
    combine("thm15_cross", &["weight", "kernel"], parts)
}
