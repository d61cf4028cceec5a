//! Sparse Laurent polynomials in `x_1, ..., x_n` over a [`Scalar`] domain, with
//! the affine Weyl group action, the q-shifts and exact division.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Params, Scalar};

/// Exponent vector `α ∈ ℤⁿ`.
pub type Exponent = Vec<i32>;

/// `v + kδ`: an affine-linear functional with integral coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineExponent {
    pub v: Exponent,
    pub k: i32,
}

impl AffineExponent {
    pub fn new(v: Exponent, k: i32) -> Self {
        AffineExponent { v, k }
    }

    /// `⟨v + kδ, point⟩ = Σ v_i point_i + k`.
    pub fn pair(&self, point: &[i32]) -> i32 {
        self.v.iter().zip(point).map(|(a, b)| a * b).sum::<i32>() + self.k
    }
}

impl std::ops::Add for &AffineExponent {
    type Output = AffineExponent;
    fn add(self, rhs: &AffineExponent) -> AffineExponent {
        AffineExponent { v: self.v.iter().zip(&rhs.v).map(|(a, b)| a + b).collect(), k: self.k + rhs.k }
    }
}

/// `|α| = Σ |α_i|`.
pub fn weight(e: &[i32]) -> u32 {
    e.iter().map(|x| x.unsigned_abs()).sum()
}

/// All exponents of weight at most `k`, sorted by weight then lexicographically.
pub fn exponents_up_to(n: usize, k: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0i32; n];
    fn rec(i: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Exponent>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in -left..=left {
            cur[i] = x;
            rec(i + 1, left - x.abs(), cur, out);
        }
        cur[i] = 0;
    }
    rec(0, k as i32, &mut cur, &mut out);
    out.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial<F> {
    n: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> LaurentPolynomial<F> {
    pub fn zero(n: usize) -> Self {
        LaurentPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let n = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPolynomial { n, terms }
    }

    /// `x^α` with coefficient one.
    pub fn x_pow(exp: Exponent) -> Self {
        Self::monomial(exp, F::one())
    }

    /// `x_i^{±1}`, `i` one-based.
    pub fn var(n: usize, i: usize, sign: i32) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = sign;
        Self::x_pow(e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, F)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &[i32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// Largest `|β|` over the support; zero for the zero polynomial.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|e| weight(e)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Exponent, c: &F) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, e: Exponent, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(-c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let (mut out, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.sub_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPolynomial { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul_ref(c))).collect() }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&F) -> F) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Substitutes `x_i -> x_i^{-1}` for every `i`.
    pub fn reflect(&self) -> Self {
        LaurentPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect(),
        }
    }

    /// Componentwise minimum exponent; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> Exponent {
        let mut m = vec![0; self.n];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                m.clone_from(e);
                first = false;
            } else {
                for (a, b) in m.iter_mut().zip(e) {
                    *a = (*a).min(*b);
                }
            }
        }
        m
    }

    /// `x^{v+kδ} = q^{-k} x^v`.
    pub fn exp_monomial(params: &Params<F>, e: &AffineExponent) -> Self {
        Self::monomial(e.v.clone(), params.q_pow(-e.k))
    }

    /// The action of the generator `s_i` of the affine Weyl group:
    /// `s_0: x_1 -> q x_1^{-1}`, `s_i` swaps `x_i, x_{i+1}`, `s_n: x_n -> x_n^{-1}`.
    pub fn apply_simple_reflection(&self, params: &Params<F>, i: usize) -> Self {
        let n = self.n;
        assert!(i <= n, "generator index out of range");
        let mut out = Self::zero(n);
        let mut qcache: HashMap<i32, F> = HashMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            if i == 0 {
                let k = e[0];
                e2[0] = -k;
                if k != 0 {
                    let qk = qcache.entry(k).or_insert_with(|| params.q_pow(k));
                    out.add_term(e2, &c.mul_ref(qk));
                    continue;
                }
            } else if i == n {
                e2[n - 1] = -e[n - 1];
            } else {
                e2.swap(i - 1, i);
            }
            out.add_term(e2, c);
        }
        out
    }

    /// `τ_i^{±1}`: substitutes `x_i -> q^{±1} x_i`, `i` one-based.
    pub fn apply_translation(&self, params: &Params<F>, i: usize, sign: i32) -> Self {
        assert!(i >= 1 && i <= self.n, "translation index out of range");
        let mut qcache: HashMap<i32, F> = HashMap::new();
        LaurentPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k = e[i - 1] * sign;
                    let v =
                        if k == 0 { c.clone() } else { c.mul_ref(qcache.entry(k).or_insert_with(|| params.q_pow(k))) };
                    (e.clone(), v)
                })
                .collect(),
        }
    }

    /// Exact quotient `f / g` in the Laurent ring. Fails when `g` does not divide `f`.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        assert_eq!(self.n, g.n, "rank mismatch");
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let mf = self.min_exponents();
        let mg = g.min_exponents();
        let neg_mf: Vec<i32> = mf.iter().map(|x| -x).collect();
        let neg_mg: Vec<i32> = mg.iter().map(|x| -x).collect();

        let divisor: Vec<(GrLex, F)> = {
            let mut v: Vec<(GrLex, F)> = g.shift(&neg_mg).terms.into_iter().map(|(e, c)| (GrLex(e), c)).collect();
            v.sort_by(|a, b| b.0.cmp(&a.0));
            v
        };
        let (lead_e, lead_c) = divisor[0].clone();
        let lead_inv = lead_c.try_inv()?;

        let mut rem: BTreeMap<GrLex, F> = self.shift(&neg_mf).terms.into_iter().map(|(e, c)| (GrLex(e), c)).collect();
        let mut quot = Self::zero(self.n);
        while let Some((re, rc)) = rem.pop_last() {
            if !re.0.iter().zip(&lead_e.0).all(|(a, b)| a >= b) {
                return Err(Error::InexactDivision(format!(
                    "leading term x^{:?} not divisible by x^{:?}",
                    re.0, lead_e.0
                )));
            }
            let qe: Exponent = re.0.iter().zip(&lead_e.0).map(|(a, b)| a - b).collect();
            let qc = rc.mul_ref(&lead_inv);
            for (de, dc) in divisor.iter().skip(1) {
                let key = GrLex(de.0.iter().zip(&qe).map(|(a, b)| a + b).collect());
                let delta = qc.mul_ref(dc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= &delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.add_term(qe, &qc);
        }
        let back: Vec<i32> = mf.iter().zip(&mg).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&back))
    }

    /// Substitutes `x_i -> point_i`.
    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        assert_eq!(point.len(), self.n, "rank mismatch");
        if point.iter().any(|p| p.is_zero()) {
            return Err(Error::InvalidArgument("evaluation point has a zero component".into()));
        }
        let inv: Vec<F> = point.iter().map(|p| p.try_inv()).collect::<Result<_>>()?;
        let mut cache: Vec<HashMap<i32, F>> = vec![HashMap::new(); self.n];
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache[i].entry(k).or_insert_with(|| {
                    let base = if k > 0 { &point[i] } else { &inv[i] };
                    let mut r = F::one();
                    for _ in 0..k.unsigned_abs() {
                        r *= base;
                    }
                    r
                });
                v *= pw;
            }
            acc += &v;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!({ "exp": e, "coeff": c.to_json() })).collect();
        json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("malformed polynomial JSON: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut p = Self::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let e: Exponent = t["exp"]
                .as_array()
                .ok_or_else(|| bad("exp"))?
                .iter()
                .map(|x| x.as_i64().map(|k| k as i32).ok_or_else(|| bad("exp entry")))
                .collect::<Result<_>>()?;
            if e.len() != n {
                return Err(bad("exponent length"));
            }
            p.add_term(e, &F::from_json(&t["coeff"])?);
        }
        Ok(p)
    }
}

/// Graded lexicographic order: total degree first, then lexicographic.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GrLex(Exponent);

impl Ord for GrLex {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: i32 = self.0.iter().sum();
        let db: i32 = other.0.iter().sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GrLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Scalar> fmt::Display for LaurentPolynomial<F> {
    /// Terms as `coeff·x1^e1·x2^e2`, joined by ` + `, in descending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}
