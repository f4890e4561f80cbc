//! Eigenvalues of symmetric matrices: Householder tridiagonalization
//! followed by implicit-shift QL on the tridiagonal form.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Reduces a symmetric matrix to tridiagonal form by Householder
/// similarity, returning the diagonal `d` and the subdiagonal `e`
/// (`e[i]` couples `d[i]` and `d[i+1]`; `e[n-1]` is zero).
pub fn tridiagonalize<T: Scalar>(a: &DenseMatrix<T>) -> (Vec<T>, Vec<T>) {
    let n = a.rows();
    let bits = a.at(0, 0).bits();
    let zero = T::zero(bits);
    let mut w = a.clone();
    let mut d = vec![zero.clone(); n];
    let mut e = vec![zero.clone(); n];
    let mut v = vec![zero.clone(); n];
    let mut p = vec![zero.clone(); n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut scale = zero.clone();
        for k in 0..=l {
            scale = scale.add(&w.at(i, k).abs());
        }
        if scale.is_zero() {
            e[l] = zero.clone();
            continue;
        }
        let mut h = zero.clone();
        for k in 0..=l {
            v[k] = w.at(i, k).div(&scale);
            h = h.add(&v[k].mul(&v[k]));
        }
        let f = v[l].clone();
        let mut g = h.sqrt();
        if !f.is_negative() {
            g = g.neg();
        }
        e[l] = scale.mul(&g);
        h = h.sub(&f.mul(&g));
        v[l] = f.sub(&g);

        // p = A v / h on the leading (l+1) block, using symmetry
        for j in 0..=l {
            let mut s = w.at(j, j).mul(&v[j]);
            for k in 0..j {
                s = s.add(&w.at(j, k).mul(&v[k]));
            }
            for k in (j + 1)..=l {
                s = s.add(&w.at(k, j).mul(&v[k]));
            }
            p[j] = s.div(&h);
        }
        // K = v^T p / (2h); q = p - K v folded into the rank-2 update
        let mut kvp = zero.clone();
        for j in 0..=l {
            kvp = kvp.add(&p[j].mul(&v[j]));
        }
        let kk = kvp.div(&h.ldexp(1));
        for j in 0..=l {
            p[j] = p[j].sub(&kk.mul(&v[j]));
        }
        // A := A - v q^T - q v^T on the lower triangle
        for j in 0..=l {
            for k in 0..=j {
                let t = w.at(j, k).sub(&v[j].mul(&p[k])).sub(&p[j].mul(&v[k]));
                *w.at_mut(j, k) = t;
            }
        }
    }
    for i in 0..n {
        d[i] = w.at(i, i).clone();
    }
    (d, e)
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit-shift
/// QL algorithm with Wilkinson shifts. Output order is unspecified.
pub fn tridiagonal_eigenvalues<T: Scalar>(
    mut d: Vec<T>,
    mut e: Vec<T>,
    bits: u32,
    iter_cap: usize,
) -> Result<Vec<T>> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    let zero = T::zero(bits);
    let one = T::one(bits);
    let eps = T::exp2(1 - bits as i64, bits);
    e[n - 1] = zero.clone();

    let mut f = zero.clone();
    let mut tst1 = zero.clone();
    for l in 0..n {
        tst1 = tst1.max_val(&d[l].abs().add(&e[l].abs()));
        let mut iter = 0usize;
        loop {
            // locate a negligible subdiagonal entry
            let mut m = l;
            while m < n - 1 {
                if e[m].abs() <= eps.mul(&tst1) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > iter_cap {
                return Err(Error::NonConvergence {
                    order: n,
                    bits,
                    index: l,
                    iterations: iter,
                });
            }

            // implicit QL step with a Wilkinson-style shift
            let g = d[l].clone();
            let mut pp = d[l + 1].sub(&g).div(&e[l].ldexp(1));
            let mut r = pp.hypot(&one);
            if pp.is_negative() {
                r = r.neg();
            }
            d[l] = e[l].div(&pp.add(&r));
            d[l + 1] = e[l].mul(&pp.add(&r));
            let dl1 = d[l + 1].clone();
            let mut h = g.sub(&d[l]);
            for i in (l + 2)..n {
                d[i] = d[i].sub(&h);
            }
            f = f.add(&h);

            pp = d[m].clone();
            let mut c = one.clone();
            let mut c2 = c.clone();
            let mut c3 = c.clone();
            let el1 = e[l + 1].clone();
            let mut s = zero.clone();
            let mut s2 = zero.clone();
            for i in (l..m).rev() {
                c3 = c2.clone();
                c2 = c.clone();
                s2 = s.clone();
                let gg = c.mul(&e[i]);
                h = c.mul(&pp);
                r = pp.hypot(&e[i]);
                e[i + 1] = s.mul(&r);
                s = e[i].div(&r);
                c = pp.div(&r);
                pp = c.mul(&d[i]).sub(&s.mul(&gg));
                d[i + 1] = h.add(&s.mul(&c.mul(&gg).add(&s.mul(&d[i]))));
            }
            pp = s.mul(&s2).mul(&c3).mul(&el1).mul(&e[l]).div(&dl1).neg();
            e[l] = s.mul(&pp);
            d[l] = c.mul(&pp);
            if e[l].abs() <= eps.mul(&tst1) {
                break;
            }
        }
        d[l] = d[l].add(&f);
        e[l] = zero.clone();
    }
    Ok(d)
}
