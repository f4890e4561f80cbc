//! Householder reduction to upper Hessenberg form.

use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Orthogonal similarity reduction `Q^T A Q` to upper Hessenberg form,
/// eigenvalues preserved. The transformation is not accumulated.
pub fn hessenberg_in_place<T: Scalar>(h: &mut DenseMatrix<T>) {
    let n = h.rows();
    if n < 3 {
        return;
    }
    let bits = h.at(0, 0).bits();
    let zero = T::zero(bits);
    let mut v = vec![zero.clone(); n];

    for m in 1..(n - 1) {
        // reflect column m-1 below the subdiagonal
        let mut scale = zero.clone();
        for i in m..n {
            scale = scale.add(&h.at(i, m - 1).abs());
        }
        if scale.is_zero() {
            continue;
        }
        let mut sum = zero.clone();
        for i in (m..n).rev() {
            let t = h.at(i, m - 1).div(&scale);
            sum = sum.add(&t.mul(&t));
            v[i] = t;
        }
        let mut g = sum.sqrt();
        if !v[m].is_negative() {
            g = g.neg();
        }
        sum = sum.sub(&v[m].mul(&g));
        v[m] = v[m].sub(&g);

        // apply (I - v v^T / sum) from the left and right
        for j in m..n {
            let mut f = zero.clone();
            for i in (m..n).rev() {
                f = f.add(&v[i].mul(h.at(i, j)));
            }
            f = f.div(&sum);
            for i in m..n {
                let t = h.at(i, j).sub(&f.mul(&v[i]));
                *h.at_mut(i, j) = t;
            }
        }
        for i in 0..n {
            let mut f = zero.clone();
            for j in (m..n).rev() {
                f = f.add(&v[j].mul(h.at(i, j)));
            }
            f = f.div(&sum);
            for j in m..n {
                let t = h.at(i, j).sub(&f.mul(&v[j]));
                *h.at_mut(i, j) = t;
            }
        }

        *h.at_mut(m, m - 1) = scale.mul(&g);
        for i in (m + 1)..n {
            *h.at_mut(i, m - 1) = zero.clone();
        }
    }
}
