//! Sparse integer polynomials in the six parameter square roots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of parameters: q, t, t0, tn, u0, un.
pub const NPARAMS: usize = 6;

/// Human-readable names, in storage order.
pub const PARAM_NAMES: [&str; NPARAMS] = ["q", "t", "t0", "tn", "u0", "un"];

/// Index of each parameter inside a [`HalfExponents`] vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Q = 0,
    T = 1,
    T0 = 2,
    Tn = 3,
    U0 = 4,
    Un = 5,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [Param::Q, Param::T, Param::T0, Param::Tn, Param::U0, Param::Un];
}

/// Doubled exponents of `(q, t, t0, tn, u0, un)` in a monomial, so `1` stands for a
/// square root.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExponents(pub [i32; NPARAMS]);

impl HalfExponents {
    pub const ZERO: HalfExponents = HalfExponents([0; NPARAMS]);

    /// `p^(half/2)`.
    pub fn single(p: Param, half: i32) -> Self {
        let mut e = [0; NPARAMS];
        e[p as usize] = half;
        HalfExponents(e)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        HalfExponents(self.0.map(|e| e * k))
    }

    pub fn meet(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        HalfExponents(e)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    /// q, t, tn, u0 inverted; t0 -> un^-1 and un -> t0^-1.
    pub fn epsilon(&self) -> Self {
        let [q, t, t0, tn, u0, un] = self.0;
        HalfExponents([-q, -t, -un, -tn, -u0, -t0])
    }

    /// Every parameter inverted.
    pub fn dagger(&self) -> Self {
        HalfExponents(self.0.map(|e| -e))
    }

    /// t0 and un swapped.
    pub fn star(&self) -> Self {
        let [q, t, t0, tn, u0, un] = self.0;
        HalfExponents([q, t, un, tn, u0, t0])
    }
}

impl Add for HalfExponents {
    type Output = HalfExponents;
    fn add(self, rhs: Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
        HalfExponents(e)
    }
}

impl Sub for HalfExponents {
    type Output = HalfExponents;
    fn sub(self, rhs: Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0.iter()) {
            *a -= b;
        }
        HalfExponents(e)
    }
}

impl Neg for HalfExponents {
    type Output = HalfExponents;
    fn neg(self) -> Self {
        self.dagger()
    }
}

impl Index<Param> for HalfExponents {
    type Output = i32;
    fn index(&self, p: Param) -> &i32 {
        &self.0[p as usize]
    }
}

impl IndexMut<Param> for HalfExponents {
    fn index_mut(&mut self, p: Param) -> &mut i32 {
        &mut self.0[p as usize]
    }
}

/// Finite map from monomials to nonzero integers. Exponents may be negative; the
/// GCD and division helpers require nonnegative ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPolynomial {
    terms: BTreeMap<HalfExponents, BigInt>,
}

impl ParamPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, HalfExponents::ZERO)
    }

    pub fn monomial(c: BigInt, e: HalfExponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ParamPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (HalfExponents, BigInt)>>(it: I) -> Self {
        let mut p = ParamPolynomial::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&HalfExponents, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (HalfExponents, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, e: &HalfExponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Single term `c * m` with `c = ±1`.
    pub fn as_unit_monomial(&self) -> Option<(bool, HalfExponents)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((false, *e))
        } else if (-c).is_one() {
            Some((true, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: HalfExponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&HalfExponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent over all terms (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> HalfExponents {
        let mut it = self.terms.keys();
        match it.next() {
            None => HalfExponents::ZERO,
            Some(first) => it.fold(*first, |m, e| m.meet(e)),
        }
    }

    pub fn shift(&self, by: HalfExponents) -> Self {
        ParamPolynomial { terms: self.terms.iter().map(|(e, c)| (*e + by, c.clone())).collect() }
    }

    pub fn map_exponents(&self, f: impl Fn(&HalfExponents) -> HalfExponents) -> Self {
        ParamPolynomial::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ParamPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_int(&self, k: &BigInt) -> Self {
        ParamPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % k).is_zero());
                    (*e, c / k)
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn mul_monomial(&self, c: &BigInt, e: HalfExponents) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPolynomial { terms: self.terms.iter().map(|(k, v)| (*k + e, v * c)).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0))
    }

    /// Parameters that occur with a nonzero exponent in some term.
    pub fn variables(&self) -> [bool; NPARAMS] {
        let mut v = [false; NPARAMS];
        for e in self.terms.keys() {
            for (k, &x) in e.0.iter().enumerate() {
                if x != 0 {
                    v[k] = true;
                }
            }
        }
        v
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    /// Coefficients with respect to `var`: exponent of `var` -> polynomial in the rest.
    pub fn split_by(&self, var: usize) -> BTreeMap<i32, ParamPolynomial> {
        let mut out: BTreeMap<i32, ParamPolynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.0[var];
            let mut rest = *e;
            rest.0[var] = 0;
            out.entry(d).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    pub fn leading_coefficient_sign(&self) -> Option<bool> {
        self.leading().map(|(_, c)| c.is_negative())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ParamPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in the polynomial ring (all exponents nonnegative). Returns
    /// `None` when `rhs` does not divide `self`.
    pub fn exact_div(&self, rhs: &ParamPolynomial) -> Option<ParamPolynomial> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if let Some((neg, e)) = rhs.as_unit_monomial() {
            let q = self.shift(-e);
            if !q.is_nonnegative() && self.is_nonnegative() && rhs.is_nonnegative() {
                return None;
            }
            return Some(if neg { -q } else { q });
        }
        let (le, lc) = rhs.leading().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = ParamPolynomial::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if !le.divides(&re) {
                return None;
            }
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qe = re - le;
            for (e, c) in rhs.terms() {
                rem.add_term(*e + qe, -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(e);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// `q^(1/2)*t^-1*...`; empty string for the unit monomial.
pub fn fmt_monomial(e: &HalfExponents) -> String {
    let mut parts = Vec::new();
    for (k, &x) in e.0.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let name = PARAM_NAMES[k];
        let s = if x % 2 == 0 {
            let p = x / 2;
            if p == 1 {
                name.to_string()
            } else {
                format!("{name}^{p}")
            }
        } else {
            format!("{name}^({x}/2)")
        };
        parts.push(s);
    }
    parts.join("*")
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl<'a> Add<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn add(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in small.terms() {
            big.add_term(*e, c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn sub(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn mul(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ParamPolynomial::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = ParamPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(mut self) -> ParamPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(self) -> ParamPolynomial {
        -(self.clone())
    }
}
