//! Row-pivoted Gaussian elimination.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Solves `A X = B` by LU factorization with partial pivoting at the
/// precision of the entries. Fails when a pivot falls below
/// `eps * ||A||_inf`, naming the elimination step.
pub fn solve_dense<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let n = a.order()?;
    if b.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.rows(),
        });
    }
    a.check_finite()?;
    b.check_finite()?;
    if n == 0 {
        return Ok(b.clone());
    }
    let bits = a.at(0, 0).bits();
    let threshold = T::exp2(1 - bits as i64, bits).mul(&a.norm_inf());

    let mut lu = a.clone();
    let mut x = b.clone();
    let m = x.cols();

    for k in 0..n {
        // partial pivot
        let mut p = k;
        let mut best = lu.at(k, k).abs();
        for i in (k + 1)..n {
            let v = lu.at(i, k).abs();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best <= threshold {
            return Err(Error::SingularPivot { index: k });
        }
        if p != k {
            for j in 0..n {
                let tmp = lu.at(k, j).clone();
                *lu.at_mut(k, j) = lu.at(p, j).clone();
                *lu.at_mut(p, j) = tmp;
            }
            for j in 0..m {
                let tmp = x.at(k, j).clone();
                *x.at_mut(k, j) = x.at(p, j).clone();
                *x.at_mut(p, j) = tmp;
            }
        }
        let pivot = lu.at(k, k).clone();
        for i in (k + 1)..n {
            let factor = lu.at(i, k).div(&pivot);
            if factor.is_zero() {
                continue;
            }
            for j in (k + 1)..n {
                let v = lu.at(i, j).sub(&factor.mul(lu.at(k, j)));
                *lu.at_mut(i, j) = v;
            }
            for j in 0..m {
                let v = x.at(i, j).sub(&factor.mul(x.at(k, j)));
                *x.at_mut(i, j) = v;
            }
        }
    }

    // back substitution
    for k in (0..n).rev() {
        let pivot = lu.at(k, k).clone();
        for j in 0..m {
            let mut s = x.at(k, j).clone();
            for i in (k + 1)..n {
                s = s.sub(&lu.at(k, i).mul(x.at(i, j)));
            }
            *x.at_mut(k, j) = s.div(&pivot);
        }
    }
    Ok(x)
}
