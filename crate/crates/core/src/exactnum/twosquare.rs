use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use super::primes::require_prime;
use crate::error::{Error, Result};

/// `p = x^2 + y^2` with `x = 1 (mod 4)` and `y` even and positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSquareDecomposition {
    pub p: u64,
    pub x: i64,
    pub y: i64,
}

impl TwoSquareDecomposition {
    pub fn is_valid(&self) -> bool {
        let (x, y, p) = (self.x as i128, self.y as i128, self.p as i128);
        x * x + y * y == p && x.rem_euclid(4) == 1 && y % 2 == 0 && y > 0
    }
}

/// Brute-force search over `t <= sqrt(p)` for a square complement.
pub fn two_square_decompose(p: &BigInt) -> Result<TwoSquareDecomposition> {
    let pv = require_prime(p)?;
    if pv % 4 != 1 {
        return Err(Error::NotOneModFour(p.clone()));
    }
    let limit = pv.sqrt();
    for t in 1..=limit {
        let rest = pv - t * t;
        let s = rest.sqrt();
        if s * s != rest {
            continue;
        }
        let (odd, even) = if t % 2 == 1 { (t, s) } else { (s, t) };
        let odd = odd as i64;
        let x = if odd % 4 == 1 { odd } else { -odd };
        return Ok(TwoSquareDecomposition {
            p: pv,
            x,
            y: even as i64,
        });
    }
    unreachable!("a prime congruent to 1 mod 4 is a sum of two squares")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::primes_below;

    #[test]
    fn examples() {
        let d = two_square_decompose(&BigInt::from(5)).unwrap();
        assert_eq!((d.x, d.y), (1, 2));
        let d = two_square_decompose(&BigInt::from(13)).unwrap();
        assert_eq!((d.x, d.y), (-3, 2));
        assert!(matches!(
            two_square_decompose(&BigInt::from(7)),
            Err(Error::NotOneModFour(_))
        ));
        assert!(matches!(
            two_square_decompose(&BigInt::from(25)),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn all_primes_below_1e5() {
        for p in primes_below(100_000).into_iter().filter(|p| p % 4 == 1) {
            let d = two_square_decompose(&BigInt::from(p)).unwrap();
            assert!(d.is_valid(), "{d:?}");
            assert!(d.x % 2 != 0);
        }
    }
}
