use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::gcd::poly_gcd;
use super::poly::{HalfExponents, Param, ParamPolynomial, NPARAMS};
use crate::error::{Error, Result};

/// Exact element of the parameter field: a quotient of Laurent polynomials in
/// the square roots of `q, t, t0, tn, u0, un`.
///
/// Canonical form: the denominator has no monomial factor and a positive leading
/// coefficient, and numerator and denominator are coprime.
#[derive(Clone, Debug)]
pub struct FieldElement {
    num: ParamPolynomial,
    den: ParamPolynomial,
}

/// GCD of two Laurent polynomials up to a unit monomial; the result has no
/// monomial factor.
fn unit_free_gcd(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    if a.is_zero() || b.is_zero() {
        return ParamPolynomial::one();
    }
    if a.as_unit_monomial().is_some() || b.as_unit_monomial().is_some() {
        return ParamPolynomial::one();
    }
    poly_gcd(&a.shift(-a.min_exponents()), &b.shift(-b.min_exponents()))
}

/// `a / g` for a divisor `g` returned by [`unit_free_gcd`].
fn div_unit_free(a: &ParamPolynomial, g: &ParamPolynomial) -> ParamPolynomial {
    if g.is_one() {
        return a.clone();
    }
    let m = a.min_exponents();
    a.shift(-m).exact_div(g).expect("gcd divides").shift(m)
}

impl FieldElement {
    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: ParamPolynomial) -> Self {
        Self::normalized(num, ParamPolynomial::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(ParamPolynomial::constant(BigInt::from(k)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalized(ParamPolynomial::constant(r.numer().clone()), ParamPolynomial::constant(r.denom().clone()))
    }

    /// `sign * (monomial with the given doubled exponents)`.
    pub fn monomial(coeff: i64, e: HalfExponents) -> Self {
        Self::from_poly(ParamPolynomial::monomial(BigInt::from(coeff), e))
    }

    /// Square root of one parameter, e.g. `q^(1/2)`.
    pub fn sqrt_param(p: Param) -> Self {
        Self::monomial(1, HalfExponents::single(p, 1))
    }

    /// A parameter itself, e.g. `q`.
    pub fn param(p: Param) -> Self {
        Self::monomial(1, HalfExponents::single(p, 2))
    }

    pub fn numer(&self) -> &ParamPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &ParamPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn normalized(num: ParamPolynomial, den: ParamPolynomial) -> Self {
        if num.is_zero() || den.is_one() || den.as_unit_monomial().is_some() {
            return Self::canonical(num, den);
        }
        let g = unit_free_gcd(&num, &den);
        Self::canonical(div_unit_free(&num, &g), div_unit_free(&den, &g))
    }

    /// Canonical form of `num / den` for coprime `num` and `den`.
    fn canonical(mut num: ParamPolynomial, den: ParamPolynomial) -> Self {
        if num.is_zero() {
            return FieldElement { num, den: ParamPolynomial::one() };
        }
        if den.is_one() {
            return FieldElement { num, den };
        }
        // a unit monomial denominator folds into the numerator
        if let Some((neg, e)) = den.as_unit_monomial() {
            let num = num.shift(-e);
            return FieldElement { num: if neg { -num } else { num }, den: ParamPolynomial::one() };
        }
        let md = den.min_exponents();
        let mut den = den.shift(-md);
        num = num.shift(-md);
        let c = num.content().gcd(&den.content());
        if !c.is_one() && !c.is_zero() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        if den.leading_coefficient_sign() == Some(true) {
            num = -num;
            den = -den;
        }
        if let Some((neg, e)) = den.as_unit_monomial() {
            debug_assert!(!neg && e.is_zero());
        }
        FieldElement { num, den }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    fn map_exponents(&self, f: impl Fn(&HalfExponents) -> HalfExponents + Copy) -> Self {
        // monomial substitutions are ring automorphisms, so coprimality survives
        Self::canonical(self.num.map_exponents(f), self.den.map_exponents(f))
    }

    /// Involution sending q, t, tn, u0 to their inverses and t0 -> un^-1, un -> t0^-1.
    pub fn epsilon(&self) -> Self {
        self.map_exponents(HalfExponents::epsilon)
    }

    /// Involution inverting all six parameters.
    pub fn dagger(&self) -> Self {
        self.map_exponents(HalfExponents::dagger)
    }

    /// Duality involution: swaps t0 and un.
    pub fn star(&self) -> Self {
        self.map_exponents(HalfExponents::star)
    }

    /// Evaluates at the given values of the six square roots.
    pub fn specialize(&self, roots: &Assignment) -> Result<BigRational> {
        let d = eval_poly(&self.den, roots)?;
        if d.is_zero() {
            return Err(Error::UnluckySpecialization(format!("denominator {} vanishes", self.den)));
        }
        Ok(eval_poly(&self.num, roots)? / d)
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": poly_to_json(&self.num), "den": poly_to_json(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = poly_from_json(&v["num"])?;
        let den = poly_from_json(&v["den"])?;
        Self::new(num, den)
    }
}

fn poly_to_json(p: &ParamPolynomial) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([c.to_string(), e.0.to_vec()])).collect())
}

fn poly_from_json(v: &Value) -> Result<ParamPolynomial> {
    let bad = || Error::Parse(format!("malformed parameter polynomial: {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut p = ParamPolynomial::zero();
    for t in arr {
        let c: BigInt = t[0].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let es = t[1].as_array().ok_or_else(bad)?;
        if es.len() != NPARAMS {
            return Err(bad());
        }
        let mut e = [0i32; NPARAMS];
        for (k, x) in es.iter().enumerate() {
            e[k] = x.as_i64().ok_or_else(bad)? as i32;
        }
        p.add_term(HalfExponents(e), c);
    }
    Ok(p)
}

/// Values of the six square roots `q^(1/2), t^(1/2), t0^(1/2), tn^(1/2), u0^(1/2), un^(1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(pub [BigRational; NPARAMS]);

impl Assignment {
    /// Distinct primes 2, 3, 5, 7, 11, 13.
    pub fn primes() -> Self {
        Self::from_ints([2, 3, 5, 7, 11, 13])
    }

    pub fn from_ints(v: [i64; NPARAMS]) -> Self {
        Assignment(v.map(|k| BigRational::from_integer(BigInt::from(k))))
    }

    pub fn new(v: [BigRational; NPARAMS]) -> Result<Self> {
        if v.iter().any(|r| r.is_zero()) {
            return Err(Error::InvalidArgument("assignment values must be nonzero".into()));
        }
        Ok(Assignment(v))
    }

    pub fn root(&self, p: Param) -> &BigRational {
        &self.0[p as usize]
    }

    /// Assignment under which `specialize(x.star(), self) == specialize(x, self.star())`.
    pub fn star(&self) -> Self {
        let mut v = self.0.clone();
        v.swap(Param::T0 as usize, Param::Un as usize);
        Assignment(v)
    }

    /// `u0 = un = 1`, `t0 = tn`.
    pub fn three_parameter(q: i64, t: i64, t0: i64) -> Self {
        Self::from_ints([q, t, t0, t0, 1, 1])
    }
}

fn eval_poly(p: &ParamPolynomial, roots: &Assignment) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (e, c) in p.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for (k, &x) in e.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let r = &roots.0[k];
            if r.is_zero() {
                return Err(Error::UnluckySpecialization(format!("{} root assigned zero", super::PARAM_NAMES[k])));
            }
            v *= num_traits::pow::Pow::pow(r, x);
        }
        acc += v;
    }
    Ok(acc)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.len() > 1 {
                return write!(f, "({})", self.num);
            }
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return FieldElement { num, den: self.den.clone() };
            }
            return FieldElement::normalized(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &rhs.num;
            return FieldElement::canonical(num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs.num * &self.den);
            return FieldElement::canonical(num, self.den.clone());
        }
        // With g = gcd(d1, d2), the sum n1 (d2/g) + n2 (d1/g) can only share
        // factors of g with the denominator.
        let g = unit_free_gcd(&self.den, &rhs.den);
        let (d1, d2) = (div_unit_free(&self.den, &g), div_unit_free(&rhs.den, &g));
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return FieldElement::zero();
        }
        let h = unit_free_gcd(&num, &g);
        FieldElement::canonical(div_unit_free(&num, &h), &(&d1 * &d2) * &div_unit_free(&g, &h))
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        if self.is_zero() || rhs.is_zero() {
            return FieldElement::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return FieldElement { num: &self.num * &rhs.num, den: ParamPolynomial::one() };
        }
        let g1 = unit_free_gcd(&self.num, &rhs.den);
        let g2 = unit_free_gcd(&rhs.num, &self.den);
        let num = &div_unit_free(&self.num, &g1) * &div_unit_free(&rhs.num, &g2);
        let den = &div_unit_free(&self.den, &g2) * &div_unit_free(&rhs.den, &g1);
        FieldElement::canonical(num, den)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero; use [`FieldElement::checked_div`] to handle it.
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero field element")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $atr<&'a FieldElement> for FieldElement {
            fn $am(&mut self, rhs: &FieldElement) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement { num: ParamPolynomial::zero(), den: ParamPolynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement { num: ParamPolynomial::one(), den: ParamPolynomial::one() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: Param) -> FieldElement {
        FieldElement::param(x)
    }

    #[test]
    fn fraction_cancels_to_one() {
        let one = FieldElement::one();
        let a = &one - &p(Param::T);
        let r = a.checked_div(&a).unwrap();
        assert!(r.is_one());
        assert!(r.numer().is_one() && r.denom().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(FieldElement::one().checked_div(&FieldElement::zero()).is_err());
        assert!(FieldElement::zero().inverse().is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        let one = FieldElement::one();
        let x = &one - &p(Param::Q);
        let y = &p(Param::T) + &p(Param::Q);
        let lhs = (&x * &y).checked_div(&(&x * &x)).unwrap();
        let rhs = y.checked_div(&x).unwrap();
        assert_eq!(lhs.numer(), rhs.numer());
        assert_eq!(lhs.denom(), rhs.denom());
    }

    #[test]
    fn specialization_error_on_vanishing_denominator() {
        let one = FieldElement::one();
        let x = one.checked_div(&(&one - &p(Param::Q))).unwrap();
        let a = Assignment::from_ints([1, 1, 1, 1, 1, 1]);
        assert!(matches!(x.specialize(&a), Err(Error::UnluckySpecialization(_))));
    }

    #[test]
    fn json_round_trip() {
        let one = FieldElement::one();
        let x = (&p(Param::Q) + &FieldElement::sqrt_param(Param::Un)).checked_div(&(&one - &p(Param::T))).unwrap();
        let back = FieldElement::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
    }
}
