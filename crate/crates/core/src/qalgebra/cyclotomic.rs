use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::IntPolynomial;

/// Cache of cyclotomic polynomials, filled on demand.
///
/// Construction is serialized behind a mutex; callers get clones, so the
/// result never depends on which thread built an entry first.
#[derive(Debug, Default)]
pub struct CyclotomicTable {
    entries: Mutex<BTreeMap<u64, IntPolynomial>>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn global() -> &'static CyclotomicTable {
        static TABLE: OnceLock<CyclotomicTable> = OnceLock::new();
        TABLE.get_or_init(CyclotomicTable::new)
    }

    pub fn get(&self, d: u64) -> IntPolynomial {
        assert!(d >= 1, "cyclotomic index must be positive");
        let mut entries = self.entries.lock().expect("cyclotomic cache");
        build(&mut entries, d)
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cyclotomic cache").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn build(entries: &mut BTreeMap<u64, IntPolynomial>, d: u64) -> IntPolynomial {
    if let Some(p) = entries.get(&d) {
        return p.clone();
    }
    // q^d - 1 divided by every Phi_e with e | d, e < d.
    let mut acc = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi = build(entries, e);
        let (quot, rem) = acc.divrem_unit_leading(&phi).expect("monic divisor");
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    entries.insert(d, acc.clone());
    acc
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    CyclotomicTable::global().get(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::q_integer_poly;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(5), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn first_coefficient_outside_unit_range() {
        // Phi_105 is the smallest with a coefficient of absolute value 2.
        let phi = cyclotomic(105);
        assert_eq!(phi.degree(), Some(48));
        assert!(phi.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn products_over_divisors() {
        let table = CyclotomicTable::new();
        for n in 1..=60u64 {
            let mut prod = IntPolynomial::one();
            let mut without_one = IntPolynomial::one();
            for d in divisors(n) {
                prod = &prod * &table.get(d);
                if d > 1 {
                    without_one = &without_one * &table.get(d);
                }
            }
            let target =
                &IntPolynomial::monomial(BigInt::one(), n as usize) - &IntPolynomial::one();
            assert_eq!(prod, target, "n={n}");
            if n >= 2 {
                assert_eq!(without_one, q_integer_poly(n as usize), "n={n}");
            }
        }
        assert_eq!(table.len(), 60);
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=100u64 {
            let phi = (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count();
            assert_eq!(cyclotomic(n).degree(), Some(phi));
        }
    }
}
