//! Dense linear-algebra kernels at configurable precision.

mod balance;
mod francis;
mod hessenberg;
mod solve;
mod symmetric;

pub use balance::balance;
pub use solve::solve_dense;

use crate::context::PrecisionContext;
use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::scalar::{Complex, Scalar};

/// Sweeps allowed per eigenvalue before the iteration is declared stuck.
fn iteration_cap(n: usize) -> usize {
    40 * n.max(1)
}

/// All `n` eigenvalues of a square matrix, each with backward error on
/// the order of `eps * ||A||`.
///
/// Symmetric input is reduced to tridiagonal form and solved with the
/// implicit-shift QL algorithm (eigenvalues exactly real by
/// construction). Everything else goes through balancing, Householder
/// reduction to Hessenberg form, and Francis double-shift QR; complex
/// conjugate pairs are emitted explicitly from 2x2 Schur blocks.
///
/// Fails with [`crate::Error::NonConvergence`] if any eigenvalue is
/// still active after the iteration cap, which signals that the
/// precision is too low for the matrix order.
pub fn eigenvalues<T: Scalar>(
    a: &DenseMatrix<T>,
    ctx: &PrecisionContext,
) -> Result<Vec<Complex<T>>> {
    ctx.check_scalar::<T>()?;
    let n = a.order()?;
    a.check_finite()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let bits = ctx.bits();
    let cap = iteration_cap(n);

    if a.is_symmetric() {
        let (d, e) = if a.lower_bandwidth() <= 1 {
            // symmetric tridiagonal fast path: read the bands directly
            let mut d = Vec::with_capacity(n);
            let mut e = Vec::with_capacity(n);
            for i in 0..n {
                d.push(a.at(i, i).clone());
                e.push(if i + 1 < n {
                    a.at(i + 1, i).clone()
                } else {
                    T::zero(bits)
                });
            }
            (d, e)
        } else {
            symmetric::tridiagonalize(a)
        };
        let vals = symmetric::tridiagonal_eigenvalues(d, e, bits, cap)?;
        return Ok(vals.into_iter().map(Complex::real).collect());
    }

    let mut h = balance(a)?;
    if h.lower_bandwidth() > 1 {
        hessenberg::hessenberg_in_place(&mut h);
    }
    francis::francis_eigenvalues(&mut h, bits, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_eigenvalues_are_ones() {
        let a = DenseMatrix::<f64>::identity(5, 53);
        let ctx = PrecisionContext::double();
        let vals = eigenvalues(&a, &ctx).unwrap();
        assert_eq!(vals.len(), 5);
        for v in vals {
            assert_eq!(v.re, 1.0);
            assert_eq!(v.im, 0.0);
        }
    }

    #[test]
    fn balance_preserves_spectrum() {
        let a = DenseMatrix::from_vec(
            3,
            3,
            vec![1.0, 256.0, 0.0, 0.5, 2.0, 1024.0, 0.0, 0.125, 3.0],
        )
        .unwrap();
        let ctx = PrecisionContext::double();
        let mut v1: Vec<f64> = eigenvalues(&a, &ctx)
            .unwrap()
            .iter()
            .map(|c| c.re)
            .collect();
        let mut v2: Vec<f64> = eigenvalues(&balance(&a).unwrap(), &ctx)
            .unwrap()
            .iter()
            .map(|c| c.re)
            .collect();
        v1.sort_by(f64::total_cmp);
        v2.sort_by(f64::total_cmp);
        let norm = a.norm_inf();
        for (x, y) in v1.iter().zip(&v2) {
            assert!((x - y).abs() <= 10.0 * 2.0f64.powi(-52) * norm);
        }
    }
}
