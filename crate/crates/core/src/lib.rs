//! Exact arithmetic for the double affine Hecke algebra of type C̃n in its
//! polynomial representation, the nonsymmetric and symmetric Koornwinder
//! polynomials built from it, and the duality between parameter sets.
//!
//! Every computation runs over either the field of rational functions in the
//! square roots of `q, t, t0, tn, u0, un` ([`paramfield::FieldElement`]) or the
//! rationals under a fixed assignment of those roots (`BigRational`). Both
//! implement [`scalar::Scalar`], and all algorithms are generic over it.

pub mod cli;
pub mod duality;
pub mod error;
pub mod intertwine;
pub mod laurent;
pub mod noumi;
pub mod paramfield;
pub mod polynomials;
pub mod scalar;
pub mod weyl;
