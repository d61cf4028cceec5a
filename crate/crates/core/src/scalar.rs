//! Coefficient abstraction shared by the symbolic and the specialized modes.
//!
//! Every operator in the crate is generic over [`Scalar`]. The symbolic mode
//! uses [`FieldElement`]; the fast mode uses exact rationals obtained by
//! assigning values to the six square roots. [`Params`] supplies the values of
//! the parameter monomials in either mode.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::paramfield::{Assignment, FieldElement, HalfExponents, Param, NPARAMS};

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + 'static
{
    /// When true, the duality involution on coefficients is realized by
    /// swapping the t0 and un values in the parameter assignment rather than by
    /// transforming coefficient values.
    const STAR_BY_ASSIGNMENT: bool;

    fn from_i64(k: i64) -> Self;

    fn try_inv(&self) -> Result<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r *= rhs;
        r
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r += rhs;
        r
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r -= rhs;
        r
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    /// The part of the duality involution `*` that acts on coefficient values.
    /// Identity for specialized rationals, where `*` lives in the assignment.
    fn coefficient_star(&self) -> Self;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;
}

impl Scalar for FieldElement {
    const STAR_BY_ASSIGNMENT: bool = false;

    fn from_i64(k: i64) -> Self {
        FieldElement::from_int(k)
    }

    fn try_inv(&self) -> Result<Self> {
        self.inverse()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn coefficient_star(&self) -> Self {
        self.star()
    }

    fn to_json(&self) -> Value {
        FieldElement::to_json(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        FieldElement::from_json(v)
    }
}

impl Scalar for BigRational {
    const STAR_BY_ASSIGNMENT: bool = true;

    fn from_i64(k: i64) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn coefficient_star(&self) -> Self {
        self.clone()
    }

    /// Integers that fit in `i64` become JSON numbers, everything else a `"p/q"` string.
    fn to_json(&self) -> Value {
        if self.is_integer() {
            if let Ok(k) = i64::try_from(self.numer()) {
                return Value::from(k);
            }
        }
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(<BigRational as Scalar>::from_i64)
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}"))),
            Value::String(s) => parse_rational(s),
            _ => Err(Error::Parse(format!("expected rational, got {v}"))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Values of the six parameter square roots in a coefficient domain, with
/// derived constants (`a, b, c, d`, `s`, `ρ`, `ρ*`, ...).
#[derive(Clone, Debug)]
pub struct Params<F> {
    roots: [F; NPARAMS],
    inv_roots: [F; NPARAMS],
    assignment: Option<Assignment>,
}

/// `a = tn^½ un^½`.
pub const A: (i64, HalfExponents) = (1, HalfExponents([0, 0, 0, 1, 0, 1]));
/// `b = -tn^½ un^-½`.
pub const B: (i64, HalfExponents) = (-1, HalfExponents([0, 0, 0, 1, 0, -1]));
/// `c = q^½ t0^½ u0^½`.
pub const C: (i64, HalfExponents) = (1, HalfExponents([1, 0, 1, 0, 1, 0]));
/// `d = -q^½ t0^½ u0^-½`.
pub const D: (i64, HalfExponents) = (-1, HalfExponents([1, 0, 1, 0, -1, 0]));
/// `s = (t0 tn)^½`.
pub const S: HalfExponents = HalfExponents([0, 0, 1, 1, 0, 0]);
/// `(un tn)^½`, the image of `s` under `*`.
pub const S_STAR: HalfExponents = HalfExponents([0, 0, 0, 1, 0, 1]);

impl Params<FieldElement> {
    pub fn symbolic() -> Self {
        let roots = Param::ALL.map(FieldElement::sqrt_param);
        let inv_roots = Param::ALL.map(|p| FieldElement::monomial(1, HalfExponents::single(p, -1)));
        Params { roots, inv_roots, assignment: None }
    }
}

impl Params<BigRational> {
    pub fn specialized(assignment: &Assignment) -> Result<Self> {
        let roots = assignment.0.clone();
        let mut inv_roots = roots.clone();
        for r in inv_roots.iter_mut() {
            *r = r.try_inv()?;
        }
        Ok(Params { roots, inv_roots, assignment: Some(assignment.clone()) })
    }
}

impl<F: Scalar> Params<F> {
    /// The assignment in specialized mode.
    pub fn assignment(&self) -> Option<&Assignment> {
        self.assignment.as_ref()
    }

    /// Parameters against which `*`-transformed quantities are computed: the
    /// t0/un-swapped assignment in specialized mode, the same field otherwise.
    pub fn dual(&self) -> Self {
        if !F::STAR_BY_ASSIGNMENT {
            return self.clone();
        }
        let mut out = self.clone();
        out.roots.swap(Param::T0 as usize, Param::Un as usize);
        out.inv_roots.swap(Param::T0 as usize, Param::Un as usize);
        out.assignment = self.assignment.as_ref().map(Assignment::star);
        out
    }

    /// `coeff * Π root_k^{e_k}`.
    pub fn monomial(&self, coeff: i64, e: HalfExponents) -> F {
        let mut acc = F::from_i64(coeff);
        for k in 0..NPARAMS {
            let x = e.0[k];
            let base = if x >= 0 { &self.roots[k] } else { &self.inv_roots[k] };
            for _ in 0..x.unsigned_abs() {
                acc *= base;
            }
        }
        acc
    }

    pub fn signed(&self, m: (i64, HalfExponents)) -> F {
        self.monomial(m.0, m.1)
    }

    pub fn sqrt(&self, p: Param) -> F {
        self.roots[p as usize].clone()
    }

    pub fn sqrt_inv(&self, p: Param) -> F {
        self.inv_roots[p as usize].clone()
    }

    pub fn param(&self, p: Param) -> F {
        self.monomial(1, HalfExponents::single(p, 2))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i32) -> F {
        self.monomial(1, HalfExponents::single(Param::Q, 2 * k))
    }

    /// The Hecke parameter of node `i` of the affine diagram: `t0` for 0,
    /// `tn` for `n`, `t` otherwise.
    pub fn hecke_param(i: usize, n: usize) -> Param {
        if i == 0 {
            Param::T0
        } else if i == n {
            Param::Tn
        } else {
            Param::T
        }
    }

    /// `t_i^{±1/2}`.
    pub fn t_root(&self, i: usize, n: usize, sign: i32) -> F {
        let p = Self::hecke_param(i, n);
        if sign >= 0 {
            self.sqrt(p)
        } else {
            self.sqrt_inv(p)
        }
    }

    pub fn a(&self) -> F {
        self.signed(A)
    }
    pub fn b(&self) -> F {
        self.signed(B)
    }
    pub fn c(&self) -> F {
        self.signed(C)
    }
    pub fn d(&self) -> F {
        self.signed(D)
    }

    /// ε-transforms `a', b', c', d'` of `a, b, c, d`.
    pub fn eps_a(&self) -> F {
        self.monomial(A.0, A.1.epsilon())
    }
    pub fn eps_b(&self) -> F {
        self.monomial(B.0, B.1.epsilon())
    }
    pub fn eps_c(&self) -> F {
        self.monomial(C.0, C.1.epsilon())
    }
    pub fn eps_d(&self) -> F {
        self.monomial(D.0, D.1.epsilon())
    }

    pub fn s(&self) -> F {
        self.monomial(1, S)
    }

    /// Exponents of `q^{ρ_i} = s t^{n-i}`, `i = 1..n`.
    pub fn rho_exponents(n: usize) -> Vec<HalfExponents> {
        (1..=n).map(|i| S + HalfExponents::single(Param::T, 2 * (n - i) as i32)).collect()
    }

    /// Exponents of `q^{ρ*_i} = (un tn)^{1/2} t^{n-i}`.
    pub fn rho_star_exponents(n: usize) -> Vec<HalfExponents> {
        (1..=n).map(|i| S_STAR + HalfExponents::single(Param::T, 2 * (n - i) as i32)).collect()
    }

    /// `(q^{ρ_1}, ..., q^{ρ_n})`.
    pub fn q_rho(&self, n: usize) -> Vec<F> {
        Self::rho_exponents(n).into_iter().map(|e| self.monomial(1, e)).collect()
    }
}
