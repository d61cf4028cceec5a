//! Nonsymmetric polynomials `E_α` built by intertwiner chains from `1`, and
//! symmetric polynomials `P_λ` obtained from them by the symmetrizer.

pub mod linalg;
pub mod oracle;

use std::collections::HashMap;
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intertwine::apply_s;
use crate::laurent::{exponents_up_to, Exponent, LaurentPolynomial};
use crate::noumi::{apply_c, apply_d, apply_y, d_lambda, is_w0_invariant};
use crate::scalar::{Params, Scalar};
use crate::weyl::{affine_action, chain_to, is_partition, spectral_vector, GeneratorWord};

type Poly<F> = LaurentPolynomial<F>;

/// A polynomial together with its label and the spectrum attached to the label.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledPolynomial<F> {
    pub label: Exponent,
    pub poly: Poly<F>,
    pub spec: Vec<F>,
}

impl<F: Scalar> LabeledPolynomial<F> {
    pub fn to_json(&self) -> Value {
        let mut v = self.poly.to_json();
        v["label"] = json!(self.label);
        v["spectrum"] = Value::Array(self.spec.iter().map(Scalar::to_json).collect());
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let poly = Poly::from_json(v)?;
        let bad = || Error::Parse("malformed labeled polynomial".into());
        let label = v["label"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_i64().map(|k| k as i32).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let spec = v["spectrum"].as_array().ok_or_else(bad)?.iter().map(F::from_json).collect::<Result<_>>()?;
        Ok(LabeledPolynomial { label, poly, spec })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub size: usize,
    pub rank: usize,
}

impl BasisReport {
    pub fn invertible(&self) -> bool {
        self.size == self.rank
    }

    pub fn to_json(&self) -> Value {
        json!({"size": self.size, "rank": self.rank, "status": if self.invertible() { "pass" } else { "fail" }})
    }
}

/// Builds and memoizes `E_α` and `P_λ` for one rank and one parameter choice.
/// Unnormalized chain images are cached by word so chains sharing a prefix
/// share work.
pub struct Koornwinder<F: Scalar> {
    params: Params<F>,
    n: usize,
    chains: Mutex<HashMap<GeneratorWord, Poly<F>>>,
    es: Mutex<HashMap<Exponent, LabeledPolynomial<F>>>,
    ps: Mutex<HashMap<Exponent, LabeledPolynomial<F>>>,
}

impl<F: Scalar> Koornwinder<F> {
    pub fn new(params: Params<F>, n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        Koornwinder {
            params,
            n,
            chains: Mutex::new(HashMap::new()),
            es: Mutex::new(HashMap::new()),
            ps: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn check_len(&self, v: &[i32]) -> Result<()> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("expected {} entries, got {}", self.n, v.len())))
        }
    }

    /// Preloads a previously computed `E_α`, e.g. from an on-disk cache.
    pub fn insert_e(&self, e: LabeledPolynomial<F>) {
        self.es.lock().expect("cache lock").insert(e.label.clone(), e);
    }

    fn chain_image(&self, word: &[usize]) -> Poly<F> {
        let cache = self.chains.lock().expect("cache lock");
        let (start, mut f) = (0..=word.len())
            .rev()
            .find_map(|k| cache.get(&word[..k]).map(|p| (k, p.clone())))
            .unwrap_or((0, Poly::one(self.n)));
        drop(cache);
        for k in start..word.len() {
            f = apply_s(&self.params, word[k], &f);
            self.chains.lock().expect("cache lock").insert(word[..=k].to_vec(), f.clone());
        }
        f
    }

    pub fn compute_e(&self, alpha: &[i32]) -> Result<LabeledPolynomial<F>> {
        self.check_len(alpha)?;
        if let Some(e) = self.es.lock().expect("cache lock").get(alpha) {
            return Ok(e.clone());
        }
        let f = self.chain_image(&chain_to(alpha));
        let e = self.normalize_e(alpha, f)?;
        self.es.lock().expect("cache lock").insert(alpha.to_vec(), e.clone());
        Ok(e)
    }

    /// `E_α` along an arbitrary word from `0` to `α` in which every letter moves
    /// the current vector. Not cached.
    pub fn compute_e_along(&self, alpha: &[i32], word: &[usize]) -> Result<LabeledPolynomial<F>> {
        self.check_len(alpha)?;
        let mut cur = vec![0; self.n];
        let mut f = Poly::one(self.n);
        for &i in word {
            if i > self.n {
                return Err(Error::InvalidArgument(format!("generator {i} out of range")));
            }
            let next = affine_action(i, &cur);
            if next == cur {
                return Err(Error::InvalidArgument(format!("s_{i} fixes {cur:?}")));
            }
            f = apply_s(&self.params, i, &f);
            cur = next;
        }
        if cur != alpha {
            return Err(Error::InvalidArgument(format!("word ends at {cur:?}, not {alpha:?}")));
        }
        self.normalize_e(alpha, f)
    }

    fn normalize_e(&self, alpha: &[i32], f: Poly<F>) -> Result<LabeledPolynomial<F>> {
        let c = f.coefficient(alpha);
        if c.is_zero() {
            return Err(Error::NonGeneric(format!("coefficient of x^{alpha:?} vanishes")));
        }
        Ok(LabeledPolynomial {
            label: alpha.to_vec(),
            poly: f.scale(&c.try_inv()?),
            spec: spectral_vector(&self.params, alpha),
        })
    }

    /// `P_λ`: the symmetrization of `E_λ`, normalized at `x^λ`, checked to be
    /// `W₀`-invariant and a `D`-eigenfunction with eigenvalue `d_λ`.
    pub fn compute_p(&self, lambda: &[i32]) -> Result<LabeledPolynomial<F>> {
        self.check_len(lambda)?;
        if !is_partition(lambda) {
            return Err(Error::InvalidArgument(format!("{lambda:?} is not a partition")));
        }
        if let Some(p) = self.ps.lock().expect("cache lock").get(lambda) {
            return Ok(p.clone());
        }
        let e = self.compute_e(lambda)?;
        let sym = apply_c(&self.params, &e.poly)?;
        let c = sym.coefficient(lambda);
        if c.is_zero() {
            return Err(Error::NonGeneric(format!("symmetrization of E_{lambda:?} vanishes at x^λ")));
        }
        let poly = sym.scale(&c.try_inv()?);
        if !is_w0_invariant(&self.params, &poly) {
            return Err(Error::NonGeneric(format!("P_{lambda:?} is not W0-invariant")));
        }
        let dp = apply_d(&self.params, &poly)?;
        if dp != poly.scale(&d_lambda(&self.params, lambda)?) {
            return Err(Error::NonGeneric(format!("P_{lambda:?} fails the D-eigenvalue equation")));
        }
        let p = LabeledPolynomial { label: lambda.to_vec(), poly, spec: e.spec };
        self.ps.lock().expect("cache lock").insert(lambda.to_vec(), p.clone());
        Ok(p)
    }

    /// Whether `Y_i E = spec_i E` for every `i`.
    pub fn verify_eigen(&self, e: &LabeledPolynomial<F>) -> bool {
        (1..=self.n).all(|i| apply_y(&self.params, i, 1, &e.poly) == e.poly.scale(&e.spec[i - 1]))
    }

    /// Rank of the matrix expressing `{E_α : |α| ≤ k}` in the monomials `{x^β : |β| ≤ k}`.
    pub fn basis_check(&self, k: u32) -> Result<BasisReport> {
        let basis = exponents_up_to(self.n, k);
        let index: HashMap<&Exponent, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::with_capacity(basis.len());
        for alpha in &basis {
            let e = self.compute_e(alpha)?;
            let mut row = vec![F::zero(); basis.len()];
            for (b, c) in e.poly.terms() {
                let j = index
                    .get(b)
                    .ok_or_else(|| Error::InvalidArgument(format!("E_{alpha:?} has x^{b:?} beyond degree {k}")))?;
                row[*j] = c.clone();
            }
            rows.push(row);
        }
        Ok(BasisReport { size: basis.len(), rank: linalg::rank(&rows)? })
    }
}
