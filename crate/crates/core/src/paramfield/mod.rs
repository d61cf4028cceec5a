//! The coefficient field: rational functions in the square roots of
//! `q, t, t0, tn, u0, un`, with the involutions used by the Hecke algebra
//! and the duality theory.

mod field;
mod gcd;
mod poly;

pub use field::{Assignment, FieldElement};
pub use gcd::poly_gcd;
pub use poly::{fmt_monomial, HalfExponents, Param, ParamPolynomial, NPARAMS, PARAM_NAMES};
