//! Polynomials in `q`: q-integers, Gaussian binomials, cyclotomic
//! polynomials and the q-congruence checkers.

mod checks;
mod cyclotomic;
mod qbinomial;
mod ratfunc;

pub use crate::poly::{divides_in_zq, poly_divrem};
pub use checks::{
    check_conj57, check_conj58_q, check_lemma32, check_q_lucas, check_theorem31_q,
    check_theorem32_q, s_q, scan_conj57, scan_theorem31_q,
};
pub use cyclotomic::{cyclotomic, CyclotomicTable};
pub use qbinomial::{q_binomial, q_binomial_poly, q_integer, q_integer_poly};
pub use ratfunc::QRationalFunction;
