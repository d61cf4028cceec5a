//! The involution `*` on polynomials, evaluation points built from `ρ` and
//! `ρ*`, the pairings of `E`- and `P`-polynomials, and the functional `S`.
//!
//! A scalar `X` computed from parameters `P` has star `X(P*)^*`: in symbolic mode
//! `P* = P` and the star acts on the value; in specialized mode the star acts on
//! the assignment (t0 and un swapped) and is the identity on values.
//! [`Duality::swapped`] realizes `P ↦ P*`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Result;
use crate::laurent::{Exponent, LaurentPolynomial};
use crate::noumi::{apply_t, apply_x, apply_y, chi};
use crate::paramfield::HalfExponents;
use crate::polynomials::Koornwinder;
use crate::scalar::{Params, Scalar, S, S_STAR};
use crate::weyl::spectral_vector;

type Poly<F> = LaurentPolynomial<F>;

/// Applies `*` to every coefficient and substitutes `x_i -> x_i^{-1}`.
pub fn star_polynomial<F: Scalar>(f: &Poly<F>) -> Poly<F> {
    f.map_coefficients(Scalar::coefficient_star).reflect()
}

fn rho_point<F: Scalar>(params: &Params<F>, base: HalfExponents, shift: &[i32], sign: i32) -> Vec<F> {
    let n = shift.len();
    (0..n)
        .map(|i| {
            let e = (base + HalfExponents::single(crate::paramfield::Param::T, 2 * (n - 1 - i) as i32)).scale(sign)
                + HalfExponents::single(crate::paramfield::Param::Q, 2 * shift[i]);
            params.monomial(1, e)
        })
        .collect()
}

/// `(q^{ρ*_i})^{±1}` with `q^{ρ*_i} = (un tn)^{1/2} t^{n-i}`.
pub fn rho_star_point<F: Scalar>(params: &Params<F>, n: usize, sign: i32) -> Vec<F> {
    rho_point(params, S_STAR, &vec![0; n], sign)
}

/// `(q^{ρ_i})^{±1}` with `q^{ρ_i} = s t^{n-i}`.
pub fn rho_point_plain<F: Scalar>(params: &Params<F>, n: usize, sign: i32) -> Vec<F> {
    rho_point(params, S, &vec![0; n], sign)
}

/// `q^{μ+ρ}`.
pub fn mu_plus_rho<F: Scalar>(params: &Params<F>, mu: &[i32]) -> Vec<F> {
    rho_point(params, S, mu, 1)
}

/// `q^{μ+ρ*}`.
pub fn mu_plus_rho_star<F: Scalar>(params: &Params<F>, mu: &[i32]) -> Vec<F> {
    rho_point(params, S_STAR, mu, 1)
}

/// `q^{⟨v, ρ⟩}` or `q^{⟨v, ρ*⟩}` depending on `base`.
fn q_pairing<F: Scalar>(params: &Params<F>, base: HalfExponents, v: &[i32]) -> F {
    let n = v.len();
    let mut e = HalfExponents::ZERO;
    for (i, &vi) in v.iter().enumerate() {
        e = e + (base + HalfExponents::single(crate::paramfield::Param::T, 2 * (n - 1 - i) as i32)).scale(vi);
    }
    params.monomial(1, e)
}

/// `S(X^α T_w Y^β) = q^{⟨β,ρ⟩} χ(T_w) q^{-⟨α,ρ*⟩}`.
pub fn functional_s_closed<F: Scalar>(params: &Params<F>, alpha: &[i32], word: &[usize], beta: &[i32]) -> F {
    let n = alpha.len();
    let neg: Exponent = alpha.iter().map(|a| -a).collect();
    q_pairing(params, S, beta).mul_ref(&chi(params, n, word)).mul_ref(&q_pairing(params, S_STAR, &neg))
}

/// `S(X^α T_w Y^β)` by applying the operator to `1` and evaluating at `q^{-ρ*}`.
pub fn functional_s_operator<F: Scalar>(params: &Params<F>, alpha: &[i32], word: &[usize], beta: &[i32]) -> Result<F> {
    let n = alpha.len();
    let mut f = Poly::one(n);
    for (idx, &b) in beta.iter().enumerate().rev() {
        for _ in 0..b.unsigned_abs() {
            f = apply_y(params, idx + 1, b.signum(), &f);
        }
    }
    for &i in word.iter().rev() {
        f = apply_t(params, i, 1, &f);
    }
    for (idx, &a) in alpha.iter().enumerate() {
        for _ in 0..a.unsigned_abs() {
            f = apply_x(idx + 1, a.signum(), &f);
        }
    }
    f.evaluate(&rho_star_point(params, n, -1))
}

/// A PBW monomial `X^α T_w Y^β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwMonomial {
    pub alpha: Exponent,
    pub word: Vec<usize>,
    pub beta: Exponent,
}

impl PbwMonomial {
    /// `h* = X^{-β} T_{w^{-1}} Y^{-α}`.
    pub fn star(&self) -> Self {
        PbwMonomial {
            alpha: self.beta.iter().map(|b| -b).collect(),
            word: self.word.iter().rev().copied().collect(),
            beta: self.alpha.iter().map(|a| -a).collect(),
        }
    }
}

/// A primal family and the family whose parameters realize `*`.
pub struct Duality<F: Scalar> {
    primal: Arc<Koornwinder<F>>,
    dual: Arc<Koornwinder<F>>,
}

impl<F: Scalar> Clone for Duality<F> {
    fn clone(&self) -> Self {
        Duality { primal: self.primal.clone(), dual: self.dual.clone() }
    }
}

impl<F: Scalar> Duality<F> {
    pub fn new(params: Params<F>, n: usize) -> Self {
        let primal = Arc::new(Koornwinder::new(params.clone(), n));
        let dual = if F::STAR_BY_ASSIGNMENT { Arc::new(Koornwinder::new(params.dual(), n)) } else { primal.clone() };
        Duality { primal, dual }
    }

    pub fn from_families(primal: Arc<Koornwinder<F>>, dual: Arc<Koornwinder<F>>) -> Self {
        Duality { primal, dual }
    }

    pub fn primal(&self) -> &Koornwinder<F> {
        &self.primal
    }

    pub fn dual(&self) -> &Koornwinder<F> {
        &self.dual
    }

    /// The same pair seen from the starred parameters.
    pub fn swapped(&self) -> Self {
        Duality { primal: self.dual.clone(), dual: self.primal.clone() }
    }

    fn params(&self) -> &Params<F> {
        self.primal.params()
    }

    fn n(&self) -> usize {
        self.primal.rank()
    }

    /// The star of a scalar computed by `f` from this pair.
    pub fn star_of(&self, f: impl Fn(&Self) -> Result<F>) -> Result<F> {
        Ok(f(&self.swapped())?.coefficient_star())
    }

    /// `E_α^*` as a polynomial over the primal parameters.
    pub fn star_e(&self, alpha: &[i32]) -> Result<Poly<F>> {
        Ok(star_polynomial(&self.dual.compute_e(alpha)?.poly))
    }

    pub fn star_p(&self, lambda: &[i32]) -> Result<Poly<F>> {
        Ok(star_polynomial(&self.dual.compute_p(lambda)?.poly))
    }

    /// `𝓔_{αβ} = E_α^*(q^{β̄}) E_β(q^{-ρ*})`.
    pub fn pairing_e(&self, alpha: &[i32], beta: &[i32]) -> Result<F> {
        let left = self.star_e(alpha)?.evaluate(&spectral_vector(self.params(), beta))?;
        let right = self.primal.compute_e(beta)?.poly.evaluate(&rho_star_point(self.params(), self.n(), -1))?;
        Ok(left.mul_ref(&right))
    }

    /// `𝓟_{λμ} = P_λ^*(q^{μ+ρ}) P_μ(q^{-ρ*})`.
    pub fn pairing_p(&self, lambda: &[i32], mu: &[i32]) -> Result<F> {
        let left = self.star_p(lambda)?.evaluate(&mu_plus_rho(self.params(), mu))?;
        let right = self.primal.compute_p(mu)?.poly.evaluate(&rho_star_point(self.params(), self.n(), -1))?;
        Ok(left.mul_ref(&right))
    }

    /// `𝓔_{αβ}^* = 𝓔_{βα}`.
    pub fn check_e_symmetry(&self, alpha: &[i32], beta: &[i32]) -> Result<bool> {
        Ok(self.star_of(|d| d.pairing_e(alpha, beta))? == self.pairing_e(beta, alpha)?)
    }

    /// `𝓟_{λμ}^* = 𝓟_{μλ}`.
    pub fn check_p_symmetry(&self, lambda: &[i32], mu: &[i32]) -> Result<bool> {
        Ok(self.star_of(|d| d.pairing_p(lambda, mu))? == self.pairing_p(mu, lambda)?)
    }

    /// `P_λ(q^{μ+ρ*}) / P_λ(q^{ρ*}) = P_μ^*(q^{λ+ρ}) / P_μ^*(q^{ρ})`.
    pub fn check_evaluation_duality(&self, lambda: &[i32], mu: &[i32]) -> Result<bool> {
        let p = &self.primal.compute_p(lambda)?.poly;
        let lhs = p.evaluate(&mu_plus_rho_star(self.params(), mu))?.try_div(&p.evaluate(&rho_star_point(
            self.params(),
            self.n(),
            1,
        ))?)?;
        let ps = self.star_p(mu)?;
        let rhs = ps.evaluate(&mu_plus_rho(self.params(), lambda))?.try_div(&ps.evaluate(&rho_point_plain(
            self.params(),
            self.n(),
            1,
        ))?)?;
        Ok(lhs == rhs)
    }

    /// `S(h*) = S(h)^*`, with both sides computed by the closed form and by
    /// operator application; true only if all four values agree as required.
    pub fn check_functional_star(&self, h: &PbwMonomial) -> Result<bool> {
        let hs = h.star();
        let p = self.params();
        let closed = functional_s_closed(p, &hs.alpha, &hs.word, &hs.beta);
        let operator = functional_s_operator(p, &hs.alpha, &hs.word, &hs.beta)?;
        let star_closed = self.star_of(|d| Ok(functional_s_closed(d.params(), &h.alpha, &h.word, &h.beta)))?;
        let star_operator = self.star_of(|d| functional_s_operator(d.params(), &h.alpha, &h.word, &h.beta))?;
        Ok(closed == operator && star_closed == star_operator && closed == star_closed)
    }
}

/// One cell of a duality grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    pub kind: &'static str,
    pub left: Exponent,
    pub right: Exponent,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityReport {
    pub entries: Vec<DualityCheck>,
}

impl DualityReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    json!({
                        "check": e.kind,
                        "left": e.left,
                        "right": e.right,
                        "status": if e.passed { "pass" } else { "fail" },
                    })
                })
                .collect(),
        )
    }
}

/// Runs the `E`- and `P`-pairing symmetries and the evaluation duality on every
/// pair of labels of weight at most `k`.
pub fn duality_grid<F: Scalar>(d: &Duality<F>, k: u32) -> Result<DualityReport> {
    let n = d.n();
    let alphas = crate::laurent::exponents_up_to(n, k);
    let lambdas = crate::polynomials::oracle::partitions_up_to(n, k);
    let mut entries = Vec::new();
    for a in &alphas {
        for b in &alphas {
            entries.push(DualityCheck {
                kind: "E-symmetry",
                left: a.clone(),
                right: b.clone(),
                passed: d.check_e_symmetry(a, b)?,
            });
        }
    }
    for l in &lambdas {
        for m in &lambdas {
            entries.push(DualityCheck {
                kind: "P-symmetry",
                left: l.clone(),
                right: m.clone(),
                passed: d.check_p_symmetry(l, m)?,
            });
            entries.push(DualityCheck {
                kind: "evaluation",
                left: l.clone(),
                right: m.clone(),
                passed: d.check_evaluation_duality(l, m)?,
            });
        }
    }
    Ok(DualityReport { entries })
}
