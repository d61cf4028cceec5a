//! Dense exact linear algebra over a [`Scalar`] field.

use crate::error::Result;
use crate::scalar::Scalar;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces `m` to reduced row echelon form in place and returns the pivot columns.
pub fn rref<F: Scalar>(m: &mut Matrix<F>) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].try_inv()?;
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &factor.mul_ref(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank<F: Scalar>(m: &Matrix<F>) -> Result<usize> {
    let mut work = m.clone();
    Ok(rref(&mut work)?.len())
}

/// A basis of `{v : m v = 0}`, one vector per free column.
pub fn nullspace<F: Scalar>(m: &Matrix<F>, cols: usize) -> Result<Vec<Vec<F>>> {
    let mut work = m.clone();
    let pivots = rref(&mut work)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[r][free].clone();
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
    }

    #[test]
    fn rank_of_singular_matrix() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])).unwrap(), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])).unwrap(), 0);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3).unwrap();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let dot = row.iter().zip(&v).fold(BigRational::from_integer(0.into()), |acc, (x, y)| acc + x * y);
                assert_eq!(dot, BigRational::from_integer(0.into()));
            }
        }
    }
}
