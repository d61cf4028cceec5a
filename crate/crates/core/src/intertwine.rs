//! Intertwiners `S_i` as literal commutators of Noumi operators, the scalars by
//! which `S_i²` acts on `Y`-eigenspaces, and the intertwining identity.

use crate::error::Result;
use crate::laurent::{AffineExponent, LaurentPolynomial};
use crate::noumi::{apply_t, apply_un, apply_y};
use crate::paramfield::Param;
use crate::scalar::{Params, Scalar};
use crate::weyl::functional_action;

type Poly<F> = LaurentPolynomial<F>;

/// `S_i = T_i Y_i - Y_i T_i` for `i ≥ 1`, `S_0 = Y_1 U_n - U_n Y_1`.
pub fn apply_s<F: Scalar>(params: &Params<F>, i: usize, f: &Poly<F>) -> Poly<F> {
    assert!(i <= f.nvars(), "S index out of range");
    if i == 0 {
        let a = apply_y(params, 1, 1, &apply_un(params, 1, f));
        let b = apply_un(params, 1, &apply_y(params, 1, 1, f));
        a.sub(&b)
    } else {
        let a = apply_t(params, i, 1, &apply_y(params, i, 1, f));
        let b = apply_y(params, i, 1, &apply_t(params, i, 1, f));
        a.sub(&b)
    }
}

/// The scalar by which `S_i²` acts on the eigenspace with `Y`-eigenvalues `spec`.
pub fn s_squared_scalar<F: Scalar>(params: &Params<F>, i: usize, spec: &[F]) -> Result<F> {
    let n = spec.len();
    assert!(i <= n, "S index out of range");
    let one = F::one();
    let factor = |c: &F, y: &F| one.sub_ref(&c.mul_ref(y));
    Ok(if i == 0 {
        let y = &spec[0];
        let yinv = y.try_inv()?;
        let (c, d) = (params.eps_c(), params.eps_d());
        let q = params.q_pow(1);
        params
            .param(Param::Un)
            .mul_ref(&params.q_pow(-1))
            .mul_ref(&factor(&c, &yinv))
            .mul_ref(&factor(&d, &yinv))
            .mul_ref(&factor(&q.mul_ref(&c), y))
            .mul_ref(&factor(&q.mul_ref(&d), y))
    } else if i == n {
        let y = &spec[n - 1];
        let yinv = y.try_inv()?;
        let (a, b) = (params.eps_a(), params.eps_b());
        params
            .param(Param::Tn)
            .mul_ref(&factor(&a, y))
            .mul_ref(&factor(&b, y))
            .mul_ref(&factor(&a, &yinv))
            .mul_ref(&factor(&b, &yinv))
    } else {
        let t = params.param(Param::T);
        let tinv = t.try_inv()?;
        let (yi, yj) = (&spec[i - 1], &spec[i]);
        let ratio = yi.try_div(yj)?;
        t.mul_ref(yi).mul_ref(yj).mul_ref(&factor(&tinv, &ratio)).mul_ref(&factor(&tinv, &ratio.try_inv()?))
    })
}

/// `Y^{v+kδ} f = q^k Y_1^{v_1} ⋯ Y_n^{v_n} f`.
pub fn apply_y_affine<F: Scalar>(params: &Params<F>, e: &AffineExponent, f: &Poly<F>) -> Poly<F> {
    let mut out = f.clone();
    for (idx, &k) in e.v.iter().enumerate().rev() {
        for _ in 0..k.unsigned_abs() {
            out = apply_y(params, idx + 1, k.signum(), &out);
        }
    }
    out.scale(&params.q_pow(e.k))
}

/// Whether `Y^{ṽ} S_i f = S_i Y^{s_i(ṽ)} f`.
pub fn check_intertwining<F: Scalar>(params: &Params<F>, i: usize, v: &AffineExponent, f: &Poly<F>) -> bool {
    let lhs = apply_y_affine(params, v, &apply_s(params, i, f));
    let rhs = apply_s(params, i, &apply_y_affine(params, &functional_action(i, v), f));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paramfield::Assignment;
    use crate::weyl::{affine_action, spectral_vector};
    use num_rational::BigRational;

    fn spec_params() -> Params<BigRational> {
        Params::specialized(&Assignment::primes()).unwrap()
    }

    #[test]
    fn s0_of_one_is_eigenvector() {
        let p = spec_params();
        let f = apply_s(&p, 0, &Poly::one(2));
        assert!(!f.is_zero());
        let target = affine_action(0, &[0, 0]);
        let spec = spectral_vector(&p, &target);
        for i in 1..=2 {
            assert_eq!(apply_y(&p, i, 1, &f), f.scale(&spec[i - 1]));
        }
    }

    #[test]
    fn trivial_functional() {
        let p = spec_params();
        let f = Poly::x_pow(vec![1, -1]);
        for i in 0..=2 {
            assert!(check_intertwining(&p, i, &AffineExponent::new(vec![0, 0], 0), &f));
        }
    }

    #[test]
    fn intertwining_small_cases() {
        let p = spec_params();
        let f = Poly::x_pow(vec![1, 0]).add(&Poly::x_pow(vec![0, -1]));
        assert!(check_intertwining(&p, 1, &AffineExponent::new(vec![1, 0], 0), &f));
        assert!(check_intertwining(&p, 0, &AffineExponent::new(vec![1, 0], 0), &f));
        assert!(check_intertwining(&p, 2, &AffineExponent::new(vec![0, 1], 1), &f));
    }

    #[test]
    fn n_scalar_at_rho() {
        let p = Params::symbolic();
        let s = p.s();
        let spec = vec![s.clone()];
        let one = crate::paramfield::FieldElement::from_int(1);
        let (a, b) = (p.eps_a(), p.eps_b());
        let sinv = s.try_inv().unwrap();
        let expected = p.param(Param::Tn)
            * (one.clone() - a.clone() * s.clone())
            * (one.clone() - b.clone() * s.clone())
            * (one.clone() - a * sinv.clone())
            * (one - b * sinv);
        assert_eq!(s_squared_scalar(&p, 1, &spec).unwrap(), expected);
    }

    #[test]
    fn double_application_at_zero() {
        let p = spec_params();
        let one = Poly::one(2);
        let spec = spectral_vector(&p, &[0, 0]);
        for i in 0..=2 {
            let twice = apply_s(&p, i, &apply_s(&p, i, &one));
            assert_eq!(twice, one.scale(&s_squared_scalar(&p, i, &spec).unwrap()), "i={i}");
        }
    }
}
