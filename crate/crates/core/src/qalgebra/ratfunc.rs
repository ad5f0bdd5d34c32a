use std::fmt;

use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{poly_gcd, IntPolynomial};

/// A quotient of integer polynomials in `q`, kept in lowest terms with the
/// integer content split off and a positive leading denominator coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

fn lowest_index(p: &IntPolynomial) -> usize {
    p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0)
}

fn is_monomial(p: &IntPolynomial) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

fn unshift(p: &IntPolynomial, k: usize) -> IntPolynomial {
    IntPolynomial::new(p.coeffs()[k..].to_vec())
}

impl QRationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let mut out = QRationalFunction {
            numerator,
            denominator,
        };
        out.normalize();
        out
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        QRationalFunction {
            numerator: p,
            denominator: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The polynomial this function equals, if it has a unit denominator.
    pub fn as_polynomial(&self) -> Option<IntPolynomial> {
        if self.denominator.is_one_poly() {
            Some(self.numerator.clone())
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator = IntPolynomial::one();
            return;
        }
        // Strip common powers of q first; denominators here are often q^e.
        let shift = lowest_index(&self.numerator).min(lowest_index(&self.denominator));
        if shift > 0 {
            self.numerator = unshift(&self.numerator, shift);
            self.denominator = unshift(&self.denominator, shift);
        }
        if !is_monomial(&self.denominator) && self.denominator.degree() != Some(0) {
            let g = poly_gcd(&self.numerator, &self.denominator);
            if g.degree().is_some_and(|d| d > 0) {
                self.numerator = exact_div(&self.numerator, &g);
                self.denominator = exact_div(&self.denominator, &g);
            }
        }
        let mut c = self.numerator.content().gcd(&self.denominator.content());
        if self.denominator.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            self.numerator = self.numerator.div_exact_scalar(&c).expect("content");
            self.denominator = self.denominator.div_exact_scalar(&c).expect("content");
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.denominator == rhs.denominator {
            return Self::new(&self.numerator + &rhs.numerator, self.denominator.clone());
        }
        Self::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }

    pub fn neg(&self) -> Self {
        QRationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        Self::new(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        )
    }

    /// Value at a rational point where the denominator does not vanish.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.denominator.eval(q);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(q) / d)
        }
    }
}

fn exact_div(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (q, r) = crate::poly::poly_divrem(a, b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    // b is primitive, so Gauss's lemma makes the quotient integral.
    q.to_integer().expect("integral quotient")
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for IntPolynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl From<IntPolynomial> for QRationalFunction {
    fn from(p: IntPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one_poly() {
            write!(f, "{}", crate::verify::render_poly(&self.numerator))
        } else {
            write!(
                f,
                "{} / {}",
                crate::verify::render_poly(&self.numerator),
                crate::verify::render_poly(&self.denominator)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let f = QRationalFunction::new(p(&[-1, 0, 1]), p(&[2, 2]));
        assert_eq!(f.numerator(), &p(&[-1, 1]));
        assert_eq!(f.denominator(), &p(&[2]));
        let g = QRationalFunction::new(p(&[0, 0, 3]), p(&[0, -6]));
        assert_eq!(g.numerator(), &p(&[0, -1]));
        assert_eq!(g.denominator(), &p(&[2]));
    }

    #[test]
    fn field_operations() {
        let a = QRationalFunction::new(p(&[1]), p(&[0, 1]));
        let b = QRationalFunction::new(p(&[1]), p(&[1, 1]));
        let s = a.add(&b);
        assert_eq!(s, QRationalFunction::new(p(&[1, 2]), p(&[0, 1, 1])));
        assert_eq!(s.sub(&b), a);
        assert_eq!(a.mul(&b).div(&b), a);
    }
}
