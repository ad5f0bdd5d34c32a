use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Generalized binomial coefficient `C(n, k) = n (n-1) ... (n-k+1) / k!`
/// for any integer `n`.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// [`binomial`] with a machine-integer upper argument.
pub fn binomial_i(n: i64, k: u64) -> BigInt {
    binomial(&BigInt::from(n), k)
}

/// `C(2k, k)`.
pub fn central_binomial(k: u64) -> BigInt {
    binomial_i(2 * k as i64, k)
}

/// Catalan number `C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> BigInt {
    central_binomial(k) / (k + 1)
}

/// `C(2k, k) / (2k - 1)`, always an integer: `-1` at `k = 0`, `2 C_{k-1}` after.
pub fn central_binomial_over_2k_minus_1(k: u64) -> BigInt {
    if k == 0 {
        BigInt::from(-1)
    } else {
        catalan(k - 1) * 2
    }
}

/// Successive values `C(n, 0), C(n, 1), ...` for a fixed upper argument,
/// one multiply and one exact division per step.
#[derive(Debug, Clone)]
pub struct BinomialRow {
    n: BigInt,
    k: u64,
    current: BigInt,
}

impl BinomialRow {
    pub fn new(n: impl Into<BigInt>) -> Self {
        BinomialRow {
            n: n.into(),
            k: 0,
            current: BigInt::one(),
        }
    }
}

impl Iterator for BinomialRow {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let out = self.current.clone();
        if !self.current.is_zero() {
            self.current *= &self.n - self.k;
            self.current /= self.k + 1;
        }
        self.k += 1;
        Some(out)
    }
}
