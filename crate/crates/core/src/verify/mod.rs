//! Per-statement checkers and the record type they produce.
//!
//! A [`CheckResult`] is one verification instance. Congruence checks render
//! `lhs`/`rhs` as residues modulo `modulus`; identity checks render both
//! sides as exact values (polynomials as low-to-high coefficient arrays).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactnum::residue::residue_mod;
use crate::poly::{IntPolynomial, RationalPolynomial};

mod classical;
pub mod conjectures;
pub mod families;
mod framework;
mod identities;
pub mod irreducible;
pub mod kernel;
pub mod logbounds;
mod theorem15;

pub use classical::*;
pub use framework::*;
pub use identities::*;
pub use kernel::{
    named_kernel, paper_kernels, power_kernels, KernelDenominator, KernelHypothesis, KernelSpec,
    SignExponent,
};
pub use theorem15::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    IllPosed,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::IllPosed => "ILL_POSED",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub modulus: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(family: &str) -> Self {
        CheckResult {
            family: family.to_string(),
            params: BTreeMap::new(),
            status: Status::Pass,
            lhs: String::new(),
            rhs: String::new(),
            modulus: String::new(),
            witness: None,
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `lhs = rhs (mod base^exp)` for rationals; either side failing to
    /// reduce makes the instance ill-posed.
    pub fn congruence(
        mut self,
        lhs: &BigRational,
        rhs: &BigRational,
        base: &BigInt,
        exp: u32,
    ) -> Self {
        let modulus = num_traits::pow(base.clone(), exp as usize);
        self.modulus = modulus.to_string();
        let reduced =
            residue_mod(lhs, base, exp).and_then(|l| Ok((l, residue_mod(rhs, base, exp)?)));
        match reduced {
            Ok((l, r)) => {
                self.lhs = l.value().to_string();
                self.rhs = r.value().to_string();
                if l.congruent(&r) {
                    self.status = Status::Pass;
                } else {
                    let diff = residue_mod(&(lhs - rhs), base, exp).expect("reducible");
                    self.status = Status::Fail;
                    self.witness = Some(format!("lhs - rhs = {} (mod {})", diff.value(), modulus));
                }
            }
            Err(e) => self = self.ill_posed(e),
        }
        self
    }

    /// `value = 0 (mod modulus)` in the sense `value / modulus` is an integer.
    pub fn divisible(mut self, value: &BigRational, modulus: &BigInt) -> Self {
        self.modulus = modulus.to_string();
        self.rhs = "0".into();
        let q = value / BigRational::from_integer(modulus.clone());
        if value.is_integer() {
            let v = value.to_integer();
            let r = num_integer::Integer::mod_floor(&v, &abs(modulus));
            self.lhs = r.to_string();
        } else {
            self.lhs = value.to_string();
        }
        if q.is_integer() {
            self.status = Status::Pass;
        } else {
            self.status = Status::Fail;
            self.witness = Some(format!("value {value} / {modulus} = {q} is not an integer"));
        }
        self
    }

    /// `value` is an integer.
    pub fn integral(self, value: &BigRational) -> Self {
        self.divisible(value, &BigInt::one())
    }

    /// Exact equality of two rationals.
    pub fn equal(mut self, lhs: &BigRational, rhs: &BigRational) -> Self {
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self.modulus = "0".into();
        if lhs == rhs {
            self.status = Status::Pass;
        } else {
            self.status = Status::Fail;
            self.witness = Some(format!("lhs - rhs = {}", lhs - rhs));
        }
        self
    }

    /// Exact equality of two rational polynomials.
    pub fn equal_poly(mut self, lhs: &RationalPolynomial, rhs: &RationalPolynomial) -> Self {
        self.lhs = render_rpoly(lhs);
        self.rhs = render_rpoly(rhs);
        self.modulus = "0".into();
        if lhs == rhs {
            self.status = Status::Pass;
        } else {
            let diff = lhs.sub(rhs);
            let first = diff.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
            self.status = Status::Fail;
            self.witness = Some(format!(
                "coefficient of degree {first} differs by {}",
                diff.coeff(first)
            ));
        }
        self
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn ill_posed(mut self, err: Error) -> Self {
        self.status = Status::IllPosed;
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {err}"),
            None => err.to_string(),
        });
        self
    }

    /// Folds a further sub-check into this result: the first non-pass wins.
    pub fn and(self, other: CheckResult) -> CheckResult {
        if self.status == Status::Pass && other.status != Status::Pass {
            let mut out = self;
            out.status = other.status;
            out.witness = other.witness.map(|w| format!("{}: {w}", other.family));
            if let Some(n) = other.note {
                out = out.note(n);
            }
            out
        } else {
            self
        }
    }
}

/// Folds sub-claims into one result. The first non-pass part is returned as
/// is; when all pass, the first part is returned with the `drop` params
/// removed and a note recording how many claims were checked.
pub fn combine(family: &str, drop: &[&str], parts: Vec<CheckResult>) -> CheckResult {
    let count = parts.len();
    if let Some(bad) = parts.iter().find(|r| !r.passed()) {
        let mut out = bad.clone();
        out.family = family.to_string();
        return out;
    }
    let mut out = parts
        .into_iter()
        .next()
        .unwrap_or_else(|| CheckResult::new(family));
    out.family = family.to_string();
    for key in drop {
        out.params.remove(*key);
    }
    if count > 1 {
        out = out.note(format!("all {count} claims hold"));
    }
    out
}

fn abs(n: &BigInt) -> BigInt {
    num_traits::Signed::abs(n)
}

pub fn render_poly(p: &IntPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn render_rpoly(p: &RationalPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn render_list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn congruence_statuses() {
        let p = BigInt::from(5);
        let r = CheckResult::new("t").congruence(&ratio(7, 1), &ratio(2, 1), &p, 1);
        assert_eq!(r.status, Status::Pass);
        let r = CheckResult::new("t").congruence(&ratio(7, 1), &ratio(3, 1), &p, 1);
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
        let r = CheckResult::new("t").congruence(&ratio(1, 5), &ratio(3, 1), &p, 1);
        assert_eq!(r.status, Status::IllPosed);
        assert!(r.note.unwrap().contains("not invertible"));
    }

    #[test]
    fn divisibility_statuses() {
        let r = CheckResult::new("t").divisible(&ratio(-40, 1), &BigInt::from(8));
        assert!(r.passed());
        assert_eq!(r.lhs, "0");
        let r = CheckResult::new("t").divisible(&ratio(3, 2), &BigInt::from(1));
        assert_eq!(r.status, Status::Fail);
        assert!(CheckResult::new("t").integral(&ratio(6, 3)).passed());
    }
}
