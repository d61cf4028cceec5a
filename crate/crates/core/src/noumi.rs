//! The Noumi representation of the double affine Hecke algebra of type C̃n on
//! Laurent polynomials, with the symmetrizer, Koornwinder's operator `D`, and a
//! relation-check suite.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intertwine::apply_s;
use crate::laurent::{exponents_up_to, Exponent, LaurentPolynomial};
use crate::paramfield::Param;
use crate::scalar::{Params, Scalar};
use crate::weyl::{coxeter_order, is_partition, spectral_exponents, SignedPermutation};

type Poly<F> = LaurentPolynomial<F>;

/// A generator of the algebra as it acts on polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorAtom {
    T(usize),
    Tinv(usize),
    X(usize),
    Xinv(usize),
    Y(usize),
    Yinv(usize),
    U0,
    U0inv,
    Un,
    Uninv,
    S(usize),
}

/// A product of atoms, written left to right; the rightmost atom acts first.
pub type OperatorWord = Vec<OperatorAtom>;

impl OperatorAtom {
    pub fn inverse(self) -> Option<Self> {
        use OperatorAtom::*;
        Some(match self {
            T(i) => Tinv(i),
            Tinv(i) => T(i),
            X(i) => Xinv(i),
            Xinv(i) => X(i),
            Y(i) => Yinv(i),
            Yinv(i) => Y(i),
            U0 => U0inv,
            U0inv => U0,
            Un => Uninv,
            Uninv => Un,
            S(_) => return None,
        })
    }

    fn check_range(self, n: usize) -> Result<()> {
        use OperatorAtom::*;
        let ok = match self {
            T(i) | Tinv(i) | S(i) => i <= n,
            X(i) | Xinv(i) | Y(i) | Yinv(i) => i >= 1 && i <= n,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{self:?} out of range for n = {n}")))
        }
    }
}

impl std::fmt::Display for OperatorAtom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use OperatorAtom::*;
        match self {
            T(i) => write!(f, "T{i}"),
            Tinv(i) => write!(f, "T{i}^-1"),
            X(i) => write!(f, "X{i}"),
            Xinv(i) => write!(f, "X{i}^-1"),
            Y(i) => write!(f, "Y{i}"),
            Yinv(i) => write!(f, "Y{i}^-1"),
            U0 => write!(f, "U0"),
            U0inv => write!(f, "U0^-1"),
            Un => write!(f, "Un"),
            Uninv => write!(f, "Un^-1"),
            S(i) => write!(f, "S{i}"),
        }
    }
}

pub fn inverse_word(word: &[OperatorAtom]) -> Option<OperatorWord> {
    word.iter().rev().map(|a| a.inverse()).collect()
}

/// Numerator and denominator of the rational coefficient of `(s_i - 1)` in `T_i`.
fn t_fraction<F: Scalar>(params: &Params<F>, n: usize, i: usize) -> (Poly<F>, Poly<F>) {
    let one = Poly::one(n);
    let mut unit = vec![0; n];
    let mono = |e: &Exponent, c: F| Poly::monomial(e.clone(), c);
    if i == 0 {
        unit[0] = -1;
        let num = one.sub(&mono(&unit, params.c())).mul(&one.sub(&mono(&unit, params.d())));
        unit[0] = -2;
        let den = one.sub(&mono(&unit, params.q_pow(1)));
        (num, den)
    } else if i == n {
        unit[n - 1] = 1;
        let num = one.sub(&mono(&unit, params.a())).mul(&one.sub(&mono(&unit, params.b())));
        unit[n - 1] = 2;
        let den = one.sub(&mono(&unit, F::one()));
        (num, den)
    } else {
        unit[i - 1] = 1;
        unit[i] = -1;
        let num = one.sub(&mono(&unit, params.param(Param::T)));
        let den = one.sub(&mono(&unit, F::one()));
        (num, den)
    }
}

/// `T_i^{±1} f = t_i^{±1/2} f + t_i^{-1/2} N_i (s_i f - f) / Den_i`.
pub fn apply_t<F: Scalar>(params: &Params<F>, i: usize, sign: i32, f: &Poly<F>) -> Poly<F> {
    let n = f.nvars();
    assert!(i <= n, "T index out of range");
    let base = f.scale(&params.t_root(i, n, sign));
    let diff = f.apply_simple_reflection(params, i).sub(f);
    if diff.is_zero() {
        return base;
    }
    let (num, den) = t_fraction(params, n, i);
    let quotient = diff.exact_divide(&den).unwrap_or_else(|e| panic!("T_{i} left the polynomial ring: {e}"));
    base.add(&num.mul(&quotient).scale(&params.t_root(i, n, -1)))
}

pub fn apply_x<F: Scalar>(i: usize, sign: i32, f: &Poly<F>) -> Poly<F> {
    let mut e = vec![0; f.nvars()];
    e[i - 1] = sign;
    f.shift(&e)
}

/// The word `(T_i ⋯ T_{n-1})(T_n ⋯ T_0)(T_1^{-1} ⋯ T_{i-1}^{-1})` for `Y_i`.
pub fn y_word(n: usize, i: usize) -> OperatorWord {
    let mut w: OperatorWord = (i..n).map(OperatorAtom::T).collect();
    w.extend((0..=n).rev().map(OperatorAtom::T));
    w.extend((1..i).map(OperatorAtom::Tinv));
    w
}

fn apply_t_word<F: Scalar>(params: &Params<F>, word: &[OperatorAtom], f: &Poly<F>) -> Poly<F> {
    word.iter().rev().fold(f.clone(), |acc, a| match *a {
        OperatorAtom::T(i) => apply_t(params, i, 1, &acc),
        OperatorAtom::Tinv(i) => apply_t(params, i, -1, &acc),
        _ => unreachable!("not a T atom"),
    })
}

pub fn apply_y<F: Scalar>(params: &Params<F>, i: usize, sign: i32, f: &Poly<F>) -> Poly<F> {
    let n = f.nvars();
    assert!(i >= 1 && i <= n, "Y index out of range");
    let w = y_word(n, i);
    if sign >= 0 {
        apply_t_word(params, &w, f)
    } else {
        apply_t_word(params, &inverse_word(&w).expect("T word"), f)
    }
}

/// `U_0 = q^{-1/2} T_0^{-1} X_1`.
pub fn apply_u0<F: Scalar>(params: &Params<F>, sign: i32, f: &Poly<F>) -> Poly<F> {
    if sign >= 0 {
        apply_t(params, 0, -1, &apply_x(1, 1, f)).scale(&params.sqrt_inv(Param::Q))
    } else {
        apply_x(1, -1, &apply_t(params, 0, 1, f)).scale(&params.sqrt(Param::Q))
    }
}

/// `U_n = X_1^{-1} T_0 Y_1^{-1}`.
pub fn apply_un<F: Scalar>(params: &Params<F>, sign: i32, f: &Poly<F>) -> Poly<F> {
    if sign >= 0 {
        apply_x(1, -1, &apply_t(params, 0, 1, &apply_y(params, 1, -1, f)))
    } else {
        apply_y(params, 1, 1, &apply_t(params, 0, -1, &apply_x(1, 1, f)))
    }
}

pub fn apply_atom<F: Scalar>(params: &Params<F>, atom: OperatorAtom, f: &Poly<F>) -> Result<Poly<F>> {
    use OperatorAtom::*;
    atom.check_range(f.nvars())?;
    Ok(match atom {
        T(i) => apply_t(params, i, 1, f),
        Tinv(i) => apply_t(params, i, -1, f),
        X(i) => apply_x(i, 1, f),
        Xinv(i) => apply_x(i, -1, f),
        Y(i) => apply_y(params, i, 1, f),
        Yinv(i) => apply_y(params, i, -1, f),
        U0 => apply_u0(params, 1, f),
        U0inv => apply_u0(params, -1, f),
        Un => apply_un(params, 1, f),
        Uninv => apply_un(params, -1, f),
        S(i) => apply_s(params, i, f),
    })
}

pub fn apply_word<F: Scalar>(params: &Params<F>, word: &[OperatorAtom], f: &Poly<F>) -> Result<Poly<F>> {
    word.iter().rev().try_fold(f.clone(), |acc, &a| apply_atom(params, a, &acc))
}

/// `T_w = T_{i_1} ⋯ T_{i_l}` for a word over `1..n`.
pub fn apply_tw<F: Scalar>(params: &Params<F>, word: &[usize], f: &Poly<F>) -> Poly<F> {
    word.iter().rev().fold(f.clone(), |acc, &i| apply_t(params, i, 1, &acc))
}

/// `χ(T_w) = Π t_{i_k}^{1/2}`.
pub fn chi<F: Scalar>(params: &Params<F>, n: usize, word: &[usize]) -> F {
    word.iter().fold(F::one(), |acc, &i| acc.mul_ref(&params.t_root(i, n, 1)))
}

/// `Σ_w χ(T_w)²` over `W₀`.
pub fn poincare_sum<F: Scalar>(params: &Params<F>, n: usize) -> Result<F> {
    guard_rank(n)?;
    let mut total = F::zero();
    let mut level: Vec<(SignedPermutation, F)> = vec![(SignedPermutation::identity(n), F::one())];
    let mut seen: HashSet<SignedPermutation> = level.iter().map(|(w, _)| w.clone()).collect();
    while !level.is_empty() {
        let mut next = Vec::new();
        for (w, c) in &level {
            total += &c.mul_ref(c);
            for j in 1..=n {
                let w2 = SignedPermutation::generator(n, j).compose(w);
                if seen.insert(w2.clone()) {
                    next.push((w2, c.mul_ref(&params.t_root(j, n, 1))));
                }
            }
        }
        level = next;
    }
    Ok(total)
}

fn guard_rank(n: usize) -> Result<()> {
    if n > 6 {
        Err(Error::RankTooLarge(n))
    } else {
        Ok(())
    }
}

/// `C f = (Σ_w χ(T_w)²)^{-1} Σ_w χ(T_w) T_w f`, walking `W₀` breadth first by
/// left multiplication so that `T_{s_j w} f = T_j (T_w f)` reuses the previous image.
pub fn apply_c<F: Scalar>(params: &Params<F>, f: &Poly<F>) -> Result<Poly<F>> {
    let n = f.nvars();
    guard_rank(n)?;
    let mut acc = Poly::zero(n);
    let mut norm = F::zero();
    let id = SignedPermutation::identity(n);
    let mut seen: HashSet<SignedPermutation> = HashSet::from([id.clone()]);
    let mut level: Vec<(SignedPermutation, F, Poly<F>)> = vec![(id, F::one(), f.clone())];
    while !level.is_empty() {
        let mut next = Vec::new();
        for (w, c, img) in &level {
            acc = acc.add(&img.scale(c));
            norm += &c.mul_ref(c);
            for j in 1..=n {
                let w2 = SignedPermutation::generator(n, j).compose(w);
                if seen.insert(w2.clone()) {
                    next.push((w2, c.mul_ref(&params.t_root(j, n, 1)), apply_t(params, j, 1, img)));
                }
            }
        }
        level = next;
    }
    Ok(acc.scale(&norm.try_inv()?))
}

/// True when `f` is fixed by `s_1, ..., s_n`.
pub fn is_w0_invariant<F: Scalar>(params: &Params<F>, f: &Poly<F>) -> bool {
    (1..=f.nvars()).all(|i| &f.apply_simple_reflection(params, i) == f)
}

fn linear<F: Scalar>(n: usize, e: Exponent, c: F) -> Poly<F> {
    Poly::one(n).sub(&Poly::monomial(e, c))
}

fn unit_vec(n: usize, pairs: &[(usize, i32)]) -> Exponent {
    let mut e = vec![0; n];
    for &(i, k) in pairs {
        e[i - 1] += k;
    }
    e
}

/// Numerator and denominator of `Φ_i(x)`.
fn phi<F: Scalar>(params: &Params<F>, n: usize, i: usize) -> (Poly<F>, Poly<F>) {
    let xi = unit_vec(n, &[(i, 1)]);
    let mut num = Poly::one(n);
    for c in [params.a(), params.b(), params.c(), params.d()] {
        num = num.mul(&linear(n, xi.clone(), c));
    }
    let mut den = linear(n, unit_vec(n, &[(i, 2)]), F::one()).mul(&linear(n, unit_vec(n, &[(i, 2)]), params.q_pow(1)));
    let t = params.param(Param::T);
    for j in (1..=n).filter(|&j| j != i) {
        let minus = unit_vec(n, &[(i, 1), (j, -1)]);
        let plus = unit_vec(n, &[(i, 1), (j, 1)]);
        num = num.mul(&linear(n, minus.clone(), t.clone())).mul(&linear(n, plus.clone(), t.clone()));
        den = den.mul(&linear(n, minus, F::one())).mul(&linear(n, plus, F::one()));
    }
    (num, den)
}

/// Koornwinder's operator `D = Σ Φ_i(x)(τ_i - 1) + Σ Φ_i(x^{-1})(τ_i^{-1} - 1)`,
/// computed over a common denominator. Fails with [`Error::NotSymmetric`] when the
/// image is not a Laurent polynomial.
pub fn apply_d<F: Scalar>(params: &Params<F>, f: &Poly<F>) -> Result<Poly<F>> {
    let n = f.nvars();
    let mut common = Poly::one(n);
    for i in 1..=n {
        let sq = unit_vec(n, &[(i, 2)]);
        common = common
            .mul(&linear(n, sq.clone(), F::one()))
            .mul(&linear(n, sq.clone(), params.q_pow(1)))
            .mul(&linear(n, sq.iter().map(|x| -x).collect(), params.q_pow(1)));
        for j in i + 1..=n {
            common = common.mul(&linear(n, unit_vec(n, &[(i, 1), (j, -1)]), F::one())).mul(&linear(
                n,
                unit_vec(n, &[(i, 1), (j, 1)]),
                F::one(),
            ));
        }
    }
    let mut total = Poly::zero(n);
    for i in 1..=n {
        let (num, den) = phi(params, n, i);
        for sign in [1, -1] {
            let diff = f.apply_translation(params, i, sign).sub(f);
            if diff.is_zero() {
                continue;
            }
            let (num, den) = if sign > 0 { (num.clone(), den.clone()) } else { (num.reflect(), den.reflect()) };
            let cofactor = common.exact_divide(&den)?;
            total = total.add(&num.mul(&diff).mul(&cofactor));
        }
    }
    total.exact_divide(&common).map_err(|e| match e {
        Error::InexactDivision(_) => Error::NotSymmetric,
        other => other,
    })
}

/// `d_λ = Σ_i [q^{-1}abcd t^{2n-i-1}(q^{λ_i} - 1) + t^{i-1}(q^{-λ_i} - 1)]`.
pub fn d_lambda<F: Scalar>(params: &Params<F>, lambda: &[i32]) -> Result<F> {
    if !is_partition(lambda) {
        return Err(Error::InvalidArgument(format!("{lambda:?} is not a partition")));
    }
    let n = lambda.len() as i32;
    let abcd_q = params.q_pow(-1).mul_ref(&params.a()).mul_ref(&params.b()).mul_ref(&params.c()).mul_ref(&params.d());
    let t = |k: i32| params.monomial(1, crate::paramfield::HalfExponents::single(Param::T, 2 * k));
    let mut out = F::zero();
    for (idx, &l) in lambda.iter().enumerate() {
        let i = idx as i32 + 1;
        let up = params.q_pow(l).sub_ref(&F::one());
        let down = params.q_pow(-l).sub_ref(&F::one());
        out += &abcd_q.mul_ref(&t(2 * n - i - 1)).mul_ref(&up);
        out += &t(i - 1).mul_ref(&down);
    }
    Ok(out)
}

/// `s t^{n-1} (Σ_i (q^{λ̄_i} + q^{-λ̄_i}) - Σ_i (q^{ρ_i} + q^{-ρ_i}))`.
pub fn d_lambda_from_spectrum<F: Scalar>(params: &Params<F>, lambda: &[i32]) -> F {
    let n = lambda.len();
    let mut sum = F::zero();
    let rho = Params::<F>::rho_exponents(n);
    for (bar, r) in spectral_exponents(lambda).into_iter().zip(rho) {
        sum += &params.monomial(1, bar);
        sum += &params.monomial(1, -bar);
        sum -= &params.monomial(1, r);
        sum -= &params.monomial(1, -r);
    }
    let pre =
        params.s().mul_ref(&params.monomial(1, crate::paramfield::HalfExponents::single(Param::T, 2 * (n as i32 - 1))));
    pre.mul_ref(&sum)
}

/// A linear combination of operator words that should vanish identically.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub name: String,
    pub terms: Vec<(F, OperatorWord)>,
}

impl<F: Scalar> Relation<F> {
    /// `Z - Z^{-1} - (z^{1/2} - z^{-1/2})`.
    fn quadratic(name: String, z: OperatorWord, root: F, root_inv: F) -> Self {
        let zinv = inverse_word(&z).expect("invertible word");
        Relation { name, terms: vec![(F::one(), z), (-F::one(), zinv), (root_inv.sub_ref(&root), vec![])] }
    }

    fn equal(name: String, lhs: OperatorWord, rhs: OperatorWord) -> Self {
        Relation { name, terms: vec![(F::one(), lhs), (-F::one(), rhs)] }
    }

    pub fn apply(&self, params: &Params<F>, f: &Poly<F>) -> Result<Poly<F>> {
        let mut acc = Poly::zero(f.nvars());
        for (c, w) in &self.terms {
            acc = acc.add(&apply_word(params, w, f)?.scale(c));
        }
        Ok(acc)
    }
}

/// The defining relations of the algebra, every braid relation of the affine
/// diagram, `U_n ∼ u_n`, and commutativity of the `Y_i`.
pub fn daha_relations<F: Scalar>(params: &Params<F>, n: usize) -> Vec<Relation<F>> {
    use OperatorAtom::*;
    let mut out = Vec::new();
    for i in 0..=n {
        out.push(Relation::quadratic(
            format!("quadratic T{i}"),
            vec![T(i)],
            params.t_root(i, n, 1),
            params.t_root(i, n, -1),
        ));
    }
    for i in 0..=n {
        for j in i + 1..=n {
            let Some(m) = coxeter_order(n, i, j) else { continue };
            let alt = |a: usize, b: usize| (0..m).map(|k| T(if k % 2 == 0 { a } else { b })).collect::<OperatorWord>();
            out.push(Relation::equal(format!("braid T{i} T{j}"), alt(i, j), alt(j, i)));
        }
    }
    for i in 0..=n {
        for j in 1..=n {
            let commutes = if i == 0 {
                j != 1
            } else if i == n {
                j != n
            } else {
                j != i && j != i + 1
            };
            if commutes {
                out.push(Relation::equal(format!("commute T{i} X{j}"), vec![T(i), X(j)], vec![X(j), T(i)]));
            }
        }
    }
    for i in 1..n {
        out.push(Relation::equal(format!("T{i} X{i} = X{} T{i}^-1", i + 1), vec![T(i), X(i)], vec![X(i + 1), Tinv(i)]));
    }
    out.push(Relation::quadratic(
        format!("X{n}^-1 T{n}^-1 ~ un"),
        vec![Xinv(n), Tinv(n)],
        params.sqrt(Param::Un),
        params.sqrt_inv(Param::Un),
    ));
    out.push(Relation::quadratic("U0 ~ u0".into(), vec![U0], params.sqrt(Param::U0), params.sqrt_inv(Param::U0)));
    out.push(Relation::quadratic("Un ~ un".into(), vec![Un], params.sqrt(Param::Un), params.sqrt_inv(Param::Un)));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Relation::equal(format!("commute Y{i} Y{j}"), vec![Y(i), Y(j)], vec![Y(j), Y(i)]));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    /// First monomial exponent on which the relation failed.
    pub witness: Option<Exponent>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub entries: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    let mut v = json!({"relation": e.relation, "status": if e.passed { "pass" } else { "fail" }});
                    if let Some(w) = &e.witness {
                        v["witness"] = json!(w);
                    }
                    v
                })
                .collect(),
        )
    }
}

/// Applies each relation to every monomial `x^α` with `|α| ≤ k`.
pub fn check_relations<F: Scalar>(
    params: &Params<F>,
    relations: &[Relation<F>],
    n: usize,
    k: u32,
) -> Result<RelationReport> {
    let monomials = exponents_up_to(n, k);
    let results: Vec<Result<RelationCheck>> = std::thread::scope(|scope| {
        let handles: Vec<_> = relations
            .iter()
            .map(|rel| {
                let monomials = &monomials;
                scope.spawn(move || -> Result<RelationCheck> {
                    for e in monomials {
                        if !rel.apply(params, &Poly::x_pow(e.clone()))?.is_zero() {
                            return Ok(RelationCheck {
                                relation: rel.name.clone(),
                                passed: false,
                                witness: Some(e.clone()),
                            });
                        }
                    }
                    Ok(RelationCheck { relation: rel.name.clone(), passed: true, witness: None })
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("relation worker panicked")).collect()
    });
    Ok(RelationReport { entries: results.into_iter().collect::<Result<_>>()? })
}

pub fn check_daha_relations<F: Scalar>(params: &Params<F>, n: usize, k: u32) -> Result<RelationReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    check_relations(params, &daha_relations(params, n), n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paramfield::{Assignment, FieldElement, HalfExponents};
    use num_rational::BigRational;

    fn spec() -> Params<BigRational> {
        Params::specialized(&Assignment::primes()).unwrap()
    }

    fn x(e: &[i32]) -> Poly<BigRational> {
        Poly::x_pow(e.to_vec())
    }

    #[test]
    fn t_on_one_is_scalar() {
        let p = spec();
        for n in 1..=3 {
            for i in 0..=n {
                let one = Poly::one(n);
                assert_eq!(apply_t(&p, i, 1, &one), one.scale(&p.t_root(i, n, 1)));
            }
        }
    }

    #[test]
    fn t_n_fixes_symmetric_input() {
        let p = spec();
        let f = x(&[0, 1]).add(&x(&[0, -1]));
        assert_eq!(apply_t(&p, 2, 1, &f), f.scale(&p.t_root(2, 2, 1)));
    }

    #[test]
    fn t1_x1_matches_relation_iv_on_one() {
        let p = spec();
        let one = Poly::one(2);
        let lhs = apply_t(&p, 1, 1, &apply_x(1, 1, &one));
        let rhs = apply_x(2, 1, &apply_t(&p, 1, -1, &one));
        assert_eq!(lhs, rhs);
        let t_half = p.sqrt(Param::T);
        let expected = x(&[0, 1]).scale(&t_half.clone().recip());
        assert_eq!(lhs, expected);
    }

    #[test]
    fn y_on_one_gives_rho() {
        let p = spec();
        for n in 1..=3 {
            let rho = p.q_rho(n);
            for i in 1..=n {
                assert_eq!(apply_y(&p, i, 1, &Poly::one(n)), Poly::constant(n, rho[i - 1].clone()));
            }
        }
    }

    #[test]
    fn relation_v_on_one() {
        let p = spec();
        let n = 2;
        let one = Poly::one(n);
        let z = apply_x(n, -1, &apply_t(&p, n, -1, &one));
        let zinv = apply_t(&p, n, 1, &apply_x(n, 1, &one));
        let expected = p.sqrt(Param::Un) - p.sqrt_inv(Param::Un);
        assert_eq!(z.sub(&zinv), Poly::constant(n, expected));
    }

    #[test]
    fn chi_examples() {
        let p = Params::symbolic();
        assert_eq!(chi(&p, 3, &[]), FieldElement::from_int(1));
        assert_eq!(chi(&p, 3, &[3]), p.sqrt(Param::Tn));
        assert_eq!(chi(&p, 3, &[1, 2, 1]), p.monomial(1, HalfExponents::single(Param::T, 3)));
    }

    #[test]
    fn symmetrizer_fixes_constants() {
        let p = spec();
        for n in 1..=3 {
            assert_eq!(apply_c(&p, &Poly::one(n)).unwrap(), Poly::one(n));
        }
    }

    #[test]
    fn d_kills_constants() {
        let p = spec();
        assert!(apply_d(&p, &Poly::one(2)).unwrap().is_zero());
    }

    #[test]
    fn d_rejects_nonsymmetric_input() {
        let p = spec();
        assert_eq!(apply_d(&p, &x(&[1])), Err(Error::NotSymmetric));
    }

    #[test]
    fn d_lambda_zero_and_one() {
        let p = Params::symbolic();
        assert!(d_lambda(&p, &[0, 0]).unwrap().is_zero());
        let abcd = p.a() * p.b() * p.c() * p.d() * p.q_pow(-1);
        let expected = abcd * (p.q_pow(1) - FieldElement::from_int(1)) + (p.q_pow(-1) - FieldElement::from_int(1));
        assert_eq!(d_lambda(&p, &[1]).unwrap(), expected);
    }

    #[test]
    fn d_lambda_spectral_form() {
        let p = Params::symbolic();
        for lam in [vec![0], vec![1], vec![3], vec![1, 0], vec![2, 1], vec![2, 2, 1]] {
            assert_eq!(d_lambda(&p, &lam).unwrap(), d_lambda_from_spectrum(&p, &lam), "{lam:?}");
        }
    }

    #[test]
    fn relations_small_specialized() {
        let p = spec();
        for n in 1..=2 {
            let report = check_daha_relations(&p, n, 1).unwrap();
            assert!(report.all_passed(), "{:?}", report);
        }
    }

    #[test]
    fn relations_symbolic_rank_one() {
        let p = Params::symbolic();
        let report = check_daha_relations(&p, 1, 1).unwrap();
        assert!(report.all_passed(), "{:?}", report);
    }
}
