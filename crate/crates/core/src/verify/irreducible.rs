//! Irreducibility of integer polynomials modulo a prime: a squarefree check
//! followed by the distinct-degree test `gcd(x^(p^i) - x, f) = 1` for
//! `i <= deg f / 2`.
//!
//! A polynomial whose leading coefficient is a unit mod `p` and which is
//! irreducible mod `p` is irreducible over the rationals.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::poly::IntPolynomial;

/// Dense polynomial over `F_p`, low to high, no trailing zeros.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn reduce(f: &IntPolynomial, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = mul(r[top], inv, p);
        if c != 0 {
            let shift = top - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - mul(c, bi, p)) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul(x, y, p)) % p;
        }
    }
    rem(&trim(out), f, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Fp {
    let mut result = vec![1u64];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &[u64], p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul(c, i as u64 % p, p))
            .collect(),
    )
}

/// Outcome of reducing `f` modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModPVerdict {
    Irreducible,
    Reducible,
    /// `p` divides the leading coefficient; the reduction says nothing.
    DegreeDrops,
}

/// Whether `f` stays irreducible modulo the prime `p` (`p < 2^32`).
pub fn irreducible_mod_p(f: &IntPolynomial, p: u64) -> ModPVerdict {
    let n = f.degree().unwrap_or(0);
    let g = reduce(f, p);
    if g.len() != n + 1 {
        return ModPVerdict::DegreeDrops;
    }
    if n == 0 {
        return ModPVerdict::Reducible;
    }
    if n == 1 {
        return ModPVerdict::Irreducible;
    }
    if gcd(&g, &derivative(&g, p), p).len() != 1 {
        return ModPVerdict::Reducible;
    }
    let mut h = vec![0u64, 1];
    for _ in 0..n / 2 {
        h = pow_poly_mod(&h, p, &g, p);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if gcd(&g, &trim(diff), p).len() != 1 {
            return ModPVerdict::Reducible;
        }
    }
    ModPVerdict::Irreducible
}

/// First prime in `candidates` modulo which `f` is irreducible.
pub fn irreducibility_witness(f: &IntPolynomial, candidates: &[u64]) -> Option<u64> {
    candidates
        .iter()
        .copied()
        .find(|&p| irreducible_mod_p(f, p) == ModPVerdict::Irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    /// Brute force: no monic factor of degree 1..=n/2 over F_p.
    fn brute_irreducible(f: &[u64], q: u64) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = q.pow(d as u32);
            for idx in 0..count {
                let mut g = vec![0u64; d + 1];
                let mut t = idx;
                for c in g.iter_mut().take(d) {
                    *c = t % q;
                    t /= q;
                }
                g[d] = 1;
                if rem(f, &g, q).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            irreducible_mod_p(&p(&[1, 0, 1]), 3),
            ModPVerdict::Irreducible
        );
        assert_eq!(irreducible_mod_p(&p(&[1, 0, 1]), 5), ModPVerdict::Reducible);
        assert_eq!(
            irreducible_mod_p(&p(&[1, 1, 3]), 3),
            ModPVerdict::DegreeDrops
        );
        assert_eq!(irreducible_mod_p(&p(&[-1, 2]), 3), ModPVerdict::Irreducible);
        // (x^2+1)^2 is not squarefree.
        assert_eq!(
            irreducible_mod_p(&p(&[1, 0, 2, 0, 1]), 3),
            ModPVerdict::Reducible
        );
        // x^4 + 1 is reducible modulo every prime.
        for q in [3u64, 5, 7, 11, 13, 17] {
            assert_eq!(
                irreducible_mod_p(&p(&[1, 0, 0, 0, 1]), q),
                ModPVerdict::Reducible
            );
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for q in [2u64, 3, 5] {
            for deg in 2..=5usize {
                for idx in 0..q.pow(deg as u32) {
                    let mut f = vec![0u64; deg + 1];
                    let mut t = idx;
                    for c in f.iter_mut().take(deg) {
                        *c = t % q;
                        t /= q;
                    }
                    f[deg] = 1;
                    let poly = IntPolynomial::new(f.iter().map(|&c| BigInt::from(c)).collect());
                    let got = irreducible_mod_p(&poly, q) == ModPVerdict::Irreducible;
                    assert_eq!(got, brute_irreducible(&f, q), "q={q} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn witness_search() {
        // 30x^2 + 24x + 1 has discriminant 456: a square mod 5, 7, 11 and 13,
        // not mod 17. 2 and 3 divide the leading coefficient.
        let s2 = p(&[1, 24, 30]);
        assert_eq!(
            irreducibility_witness(&s2, &[2, 3, 5, 7, 11, 13, 17]),
            Some(17)
        );
        assert_eq!(
            irreducibility_witness(&p(&[1, 0, 0, 0, 1]), &[3, 5, 7]),
            None
        );
    }
}
