//! Diagonal balancing with power-of-two scaling.

use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Replaces `A` by `D^-1 A D` for a diagonal `D` with power-of-two
/// entries so that corresponding row and column norms become roughly
/// equal. The spectrum is unchanged in exact arithmetic, and because the
/// scale factors are powers of two the transform introduces no rounding
/// at all.
pub fn balance<T: Scalar>(a: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let n = a.order()?;
    a.check_finite()?;
    let mut m = a.clone();
    if n < 2 {
        return Ok(m);
    }
    let bits = m.at(0, 0).bits();
    let zero = T::zero(bits);

    // Parlett-Reinsch sweep, radix 2, scaling phase only.
    let mut converged = false;
    let mut passes = 0;
    while !converged && passes < 100 {
        converged = true;
        passes += 1;
        for i in 0..n {
            let mut c = zero.clone();
            let mut r = zero.clone();
            for j in 0..n {
                if j != i {
                    c = c.add(&m.at(j, i).abs());
                    r = r.add(&m.at(i, j).abs());
                }
            }
            if c.is_zero() || r.is_zero() {
                continue;
            }
            let s = c.add(&r);
            let mut k: i64 = 0;
            let mut c_scaled = c.clone();
            // grow the column norm while it is under half the row norm
            while c_scaled < r.ldexp(-1) {
                k += 1;
                c_scaled = c_scaled.ldexp(2);
            }
            // shrink while it is at least twice the row norm
            while c_scaled >= r.ldexp(1) {
                k -= 1;
                c_scaled = c_scaled.ldexp(-2);
            }
            if k == 0 {
                continue;
            }
            // only apply when the combined norm actually drops
            let new_sum = c.ldexp(k).add(&r.ldexp(-k));
            if new_sum < s.mul(&T::parse_decimal("0.95", bits).expect("constant")) {
                converged = false;
                for j in 0..n {
                    let v = m.at(i, j).ldexp(-k);
                    *m.at_mut(i, j) = v;
                }
                for j in 0..n {
                    let v = m.at(j, i).ldexp(k);
                    *m.at_mut(j, i) = v;
                }
            }
        }
    }
    Ok(m)
}
