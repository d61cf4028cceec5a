//! Brute-force constructions by exact eigenspace computation, independent of
//! the intertwiner chains and the symmetrizer.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::laurent::{exponents_up_to, weight, Exponent, LaurentPolynomial};
use crate::noumi::{apply_d, apply_y, d_lambda};
use crate::polynomials::linalg::nullspace;
use crate::scalar::{Params, Scalar};
use crate::weyl::{enumerate_w0, is_partition, spectral_vector};

type Poly<F> = LaurentPolynomial<F>;
type Op<'a, F> = Box<dyn Fn(&Poly<F>) -> Result<Poly<F>> + 'a>;

fn coordinates<F: Scalar>(f: &Poly<F>, index: &HashMap<Exponent, usize>) -> Result<Vec<F>> {
    let mut v = vec![F::zero(); index.len()];
    for (e, c) in f.terms() {
        let k = index.get(e).ok_or_else(|| Error::InvalidArgument(format!("x^{e:?} escapes the truncated basis")))?;
        v[*k] = c.clone();
    }
    Ok(v)
}

fn combine<F: Scalar>(n: usize, polys: &[Poly<F>], coeffs: &[F]) -> Poly<F> {
    polys.iter().zip(coeffs).fold(Poly::zero(n), |acc, (p, c)| acc.add(&p.scale(c)))
}

fn normalize_at<F: Scalar>(f: Poly<F>, e: &[i32]) -> Result<Poly<F>> {
    let c = f.coefficient(e);
    if c.is_zero() {
        return Err(Error::NonGeneric(format!("leading coefficient at x^{e:?} vanishes")));
    }
    Ok(f.scale(&c.try_inv()?))
}

/// Intersects `ker(op_i - λ_i)` over the given operators inside the span of `start`.
fn joint_kernel<F: Scalar>(
    n: usize,
    start: Vec<Poly<F>>,
    index: &HashMap<Exponent, usize>,
    ops: &[(Op<'_, F>, F)],
) -> Result<Vec<Poly<F>>> {
    let mut space = start;
    for (op, value) in ops {
        if space.is_empty() {
            break;
        }
        let columns: Vec<Vec<F>> =
            space.iter().map(|g| coordinates(&op(g)?.sub(&g.scale(value)), index)).collect::<Result<_>>()?;
        let rows = index.len();
        let matrix: Vec<Vec<F>> = (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        space = nullspace(&matrix, space.len())?.iter().map(|v| combine(n, &space, v)).collect();
    }
    Ok(space)
}

/// The joint `Y`-eigenvector with the spectrum of `α` inside the span of
/// `{x^β : |β| ≤ |α|}`, normalized so that the coefficient of `x^α` is 1.
pub fn oracle_e<F: Scalar>(params: &Params<F>, alpha: &[i32]) -> Result<Poly<F>> {
    let n = alpha.len();
    let basis = exponents_up_to(n, weight(alpha));
    let index: HashMap<Exponent, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let spec = spectral_vector(params, alpha);
    let ops: Vec<(Op<'_, F>, F)> = (1..=n)
        .zip(spec)
        .map(|(i, s)| (Box::new(move |g: &Poly<F>| Ok(apply_y(params, i, 1, g))) as Op<'_, F>, s))
        .collect();
    let start = basis.iter().map(|e| Poly::x_pow(e.clone())).collect();
    let space = joint_kernel(n, start, &index, &ops)?;
    if space.len() != 1 {
        return Err(Error::NonGeneric(format!("joint eigenspace for {alpha:?} has dimension {}", space.len())));
    }
    normalize_at(space.into_iter().next().expect("one vector"), alpha)
}

/// Partitions with at most `n` parts and weight at most `k`, as length-`n` vectors.
pub fn partitions_up_to(n: usize, k: u32) -> Vec<Exponent> {
    let mut out: Vec<Exponent> = exponents_up_to(n, k).into_iter().filter(|e| is_partition(e)).collect();
    out.sort_by_key(|e| (weight(e), std::cmp::Reverse(e.clone())));
    out
}

/// `m_μ`: the sum of `x^β` over the distinct `W₀`-images `β` of `μ`.
pub fn monomial_symmetric<F: Scalar>(mu: &[i32]) -> Result<Poly<F>> {
    let n = mu.len();
    let orbit: BTreeSet<Exponent> = enumerate_w0(n)?.into_iter().map(|(w, _)| w.act(mu)).collect();
    Ok(Poly::from_terms(n, orbit.into_iter().map(|e| (e, F::one()))))
}

/// The `D`-eigenvector with eigenvalue `d_λ` among symmetric polynomials of
/// degree at most `|λ|`, normalized so that the coefficient of `x^λ` is 1.
pub fn oracle_p<F: Scalar>(params: &Params<F>, lambda: &[i32]) -> Result<Poly<F>> {
    let n = lambda.len();
    let parts = partitions_up_to(n, weight(lambda));
    let index: HashMap<Exponent, usize> =
        exponents_up_to(n, weight(lambda)).into_iter().enumerate().map(|(i, e)| (e, i)).collect();
    let start: Vec<Poly<F>> = parts.iter().map(|m| monomial_symmetric(m)).collect::<Result<_>>()?;
    let ops: Vec<(Op<'_, F>, F)> = vec![(Box::new(|g: &Poly<F>| apply_d(params, g)), d_lambda(params, lambda)?)];
    let space = joint_kernel(n, start, &index, &ops)?;
    if space.len() != 1 {
        return Err(Error::NonGeneric(format!("D-eigenspace for {lambda:?} has dimension {}", space.len())));
    }
    normalize_at(space.into_iter().next().expect("one vector"), lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_up_to(2, 2), vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![1, 1]]);
        assert_eq!(partitions_up_to(1, 3).len(), 4);
    }

    #[test]
    fn monomial_symmetric_orbit_sizes() {
        let m: Poly<num_rational::BigRational> = monomial_symmetric(&[1, 0]).unwrap();
        assert_eq!(m.len(), 4);
        let m: Poly<num_rational::BigRational> = monomial_symmetric(&[1, 1]).unwrap();
        assert_eq!(m.len(), 4);
        let m: Poly<num_rational::BigRational> = monomial_symmetric(&[2, 1]).unwrap();
        assert_eq!(m.len(), 8);
    }
}
