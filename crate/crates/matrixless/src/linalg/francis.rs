//! Shifted QR iteration on an upper Hessenberg matrix (real Schur form,
//! eigenvalues only).
//!
//! Classic Francis double-shift sweep with exceptional shifts every ten
//! stalled iterations. Complex conjugate pairs are produced explicitly
//! from trailing 2x2 blocks with negative discriminant; everything else
//! deflates to a real 1x1 block, so a real matrix never acquires fake
//! imaginary noise.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{Complex, Scalar};

/// `|magnitude| * sign(source)`, with `sign(0) = +`.
fn sign_like<T: Scalar>(magnitude: &T, source: &T) -> T {
    if source.is_negative() {
        magnitude.abs().neg()
    } else {
        magnitude.abs()
    }
}

/// Eigenvalues of an upper Hessenberg matrix. `iter_cap` bounds the
/// number of sweeps spent on any single eigenvalue before giving up.
pub fn francis_eigenvalues<T: Scalar>(
    h: &mut DenseMatrix<T>,
    bits: u32,
    iter_cap: usize,
) -> Result<Vec<Complex<T>>> {
    let n = h.rows();
    let zero = T::zero(bits);
    let eps = T::exp2(1 - bits as i64, bits);
    let mut out: Vec<Option<Complex<T>>> = vec![None; n];

    if n == 0 {
        return Ok(Vec::new());
    }

    // norm of the upper Hessenberg part, used when diagonal entries vanish
    let mut norm = zero.clone();
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            norm = norm.add(&h.at(i, j).abs());
        }
    }

    let low = 0usize;
    let mut en = n - 1;
    let mut t = zero.clone();
    let mut its = 0usize;

    'outer: loop {
        // scan for a negligible subdiagonal entry
        let mut l = low;
        for cand in (low + 1..=en).rev() {
            let mut s = h.at(cand - 1, cand - 1).abs().add(&h.at(cand, cand).abs());
            if s.is_zero() {
                s = norm.clone();
            }
            if h.at(cand, cand - 1).abs() <= eps.mul(&s) {
                l = cand;
                break;
            }
        }

        let x = h.at(en, en).clone();
        if l == en {
            // one real root
            out[en] = Some(Complex::real(x.add(&t)));
            if en == low {
                break 'outer;
            }
            en -= 1;
            its = 0;
            continue;
        }

        let na = en - 1;
        let y = h.at(na, na).clone();
        let w = h.at(en, na).mul(h.at(na, en));
        if l == na {
            // a 2x2 block: real pair or complex conjugate pair
            let p = y.sub(&x).ldexp(-1);
            let q = p.mul(&p).add(&w);
            let zz = q.abs().sqrt();
            let xt = x.add(&t);
            if !q.is_negative() {
                let zz = p.add(&sign_like(&zz, &p));
                let r1 = xt.add(&zz);
                let r2 = if zz.is_zero() {
                    r1.clone()
                } else {
                    xt.sub(&w.div(&zz))
                };
                out[na] = Some(Complex::real(r1));
                out[en] = Some(Complex::real(r2));
            } else {
                out[na] = Some(Complex::new(xt.add(&p), zz.clone()));
                out[en] = Some(Complex::new(xt.add(&p), zz.neg()));
            }
            if na == low {
                break 'outer;
            }
            en = na - 1;
            its = 0;
            continue;
        }

        its += 1;
        if its > iter_cap {
            return Err(Error::NonConvergence {
                order: n,
                bits,
                index: en,
                iterations: its,
            });
        }

        let enm2 = na - 1;
        let (mut x, mut y, mut w) = (x, y, w);
        if its.is_multiple_of(10) {
            // exceptional shift after ten stalled sweeps
            t = t.add(&x);
            for i in low..=en {
                let v = h.at(i, i).sub(&x);
                *h.at_mut(i, i) = v;
            }
            let s = h.at(en, na).abs().add(&h.at(na, enm2).abs());
            x = s.mul(&T::parse_decimal("0.75", bits).expect("constant"));
            y = x.clone();
            w = s
                .mul(&s)
                .mul(&T::parse_decimal("-0.4375", bits).expect("constant"));
        }

        // find two consecutive small subdiagonal elements
        let mut m = l;
        let mut p = zero.clone();
        let mut q = zero.clone();
        let mut r = zero.clone();
        for cand in (l..=enm2).rev() {
            let zz = h.at(cand, cand).clone();
            let rr = x.sub(&zz);
            let ss = y.sub(&zz);
            p = rr
                .mul(&ss)
                .sub(&w)
                .div(h.at(cand + 1, cand))
                .add(h.at(cand, cand + 1));
            q = h.at(cand + 1, cand + 1).sub(&zz).sub(&rr).sub(&ss);
            r = h.at(cand + 2, cand + 1).clone();
            let scale = p.abs().add(&q.abs()).add(&r.abs());
            p = p.div(&scale);
            q = q.div(&scale);
            r = r.div(&scale);
            m = cand;
            if cand == l {
                break;
            }
            let tst = p.abs().mul(
                &h.at(cand - 1, cand - 1)
                    .abs()
                    .add(&zz.abs())
                    .add(&h.at(cand + 1, cand + 1).abs()),
            );
            if h.at(cand, cand - 1).abs().mul(&q.abs().add(&r.abs())) <= eps.mul(&tst) {
                break;
            }
        }
        for i in (m + 2)..=en {
            *h.at_mut(i, i - 2) = zero.clone();
        }
        for i in (m + 3)..=en {
            *h.at_mut(i, i - 3) = zero.clone();
        }

        // double QR sweep on rows l..=en, columns m..=en
        for k in m..=na {
            let not_last = k != na;
            if k != m {
                p = h.at(k, k - 1).clone();
                q = h.at(k + 1, k - 1).clone();
                r = if not_last {
                    h.at(k + 2, k - 1).clone()
                } else {
                    zero.clone()
                };
                let xs = p.abs().add(&q.abs()).add(&r.abs());
                if xs.is_zero() {
                    continue;
                }
                p = p.div(&xs);
                q = q.div(&xs);
                r = r.div(&xs);
                let s = sign_like(&p.mul(&p).add(&q.mul(&q)).add(&r.mul(&r)).sqrt(), &p);
                *h.at_mut(k, k - 1) = s.neg().mul(&xs);
                finish_reflector(h, k, l, en, not_last, &p, &q, &r, &s);
            } else {
                let s = sign_like(&p.mul(&p).add(&q.mul(&q)).add(&r.mul(&r)).sqrt(), &p);
                if l != m {
                    let v = h.at(k, k - 1).neg();
                    *h.at_mut(k, k - 1) = v;
                }
                finish_reflector(h, k, l, en, not_last, &p, &q, &r, &s);
            }
        }
    }

    Ok(out
        .into_iter()
        .map(|v| v.expect("all eigenvalues assigned"))
        .collect())
}

/// Applies the 2- or 3-term Householder reflector built from `(p, q, r)`
/// and `s` to the active window.
#[allow(clippy::too_many_arguments)]
fn finish_reflector<T: Scalar>(
    h: &mut DenseMatrix<T>,
    k: usize,
    l: usize,
    en: usize,
    not_last: bool,
    p: &T,
    q: &T,
    r: &T,
    s: &T,
) {
    let p = p.add(s);
    let x = p.div(s);
    let y = q.div(s);
    let zz = r.div(s);
    let q = q.div(&p);
    let r = r.div(&p);

    if not_last {
        for j in k..=en {
            let mut pp = h.at(k, j).add(&q.mul(h.at(k + 1, j)));
            pp = pp.add(&r.mul(h.at(k + 2, j)));
            let a0 = h.at(k, j).sub(&pp.mul(&x));
            let a1 = h.at(k + 1, j).sub(&pp.mul(&y));
            let a2 = h.at(k + 2, j).sub(&pp.mul(&zz));
            *h.at_mut(k, j) = a0;
            *h.at_mut(k + 1, j) = a1;
            *h.at_mut(k + 2, j) = a2;
        }
        let hi = en.min(k + 3);
        for i in l..=hi {
            let mut pp = x.mul(h.at(i, k)).add(&y.mul(h.at(i, k + 1)));
            pp = pp.add(&zz.mul(h.at(i, k + 2)));
            let a0 = h.at(i, k).sub(&pp);
            let a1 = h.at(i, k + 1).sub(&pp.mul(&q));
            let a2 = h.at(i, k + 2).sub(&pp.mul(&r));
            *h.at_mut(i, k) = a0;
            *h.at_mut(i, k + 1) = a1;
            *h.at_mut(i, k + 2) = a2;
        }
    } else {
        for j in k..=en {
            let pp = h.at(k, j).add(&q.mul(h.at(k + 1, j)));
            let a0 = h.at(k, j).sub(&pp.mul(&x));
            let a1 = h.at(k + 1, j).sub(&pp.mul(&y));
            *h.at_mut(k, j) = a0;
            *h.at_mut(k + 1, j) = a1;
        }
        let hi = en.min(k + 3);
        for i in l..=hi {
            let pp = x.mul(h.at(i, k)).add(&y.mul(h.at(i, k + 1)));
            let a0 = h.at(i, k).sub(&pp);
            let a1 = h.at(i, k + 1).sub(&pp.mul(&q));
            *h.at_mut(i, k) = a0;
            *h.at_mut(i, k + 1) = a1;
        }
    }
}
