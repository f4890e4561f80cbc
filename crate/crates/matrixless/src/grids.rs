//! Sampling grids on `(0, pi)`: the uniform grid of the expansion and
//! the non-uniform "perfect" grid on which a monotone `g` interpolates
//! the eigenvalues exactly.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::SpectrumSample;

/// Uniform grid `theta_{j,n} = j pi/(n+1)`, `j = 1..n`, with spacing
/// parameter `h = 1/(n+1)`.
#[derive(Debug, Clone)]
pub struct SampledGrid<T> {
    pub n: usize,
    pub points: Vec<T>,
    pub h: T,
}

impl<T: Scalar> SampledGrid<T> {
    pub fn new(n: usize, bits: u32) -> Self {
        let pi = T::pi(bits);
        let np1 = T::from_int(n as i64 + 1, bits);
        let points = (1..=n)
            .map(|j| T::from_int(j as i64, bits).mul(&pi).div(&np1))
            .collect();
        SampledGrid {
            n,
            points,
            h: T::one(bits).div(&np1),
        }
    }
}

/// Grid points `xi_j` with `g(xi_j) = lambda_j` up to the recorded
/// residuals.
#[derive(Debug, Clone)]
pub struct PerfectGrid<T> {
    pub n: usize,
    pub xi: Vec<T>,
    pub residuals: Vec<T>,
}

/// Finds, for each eigenvalue, the root of `g(theta) - lambda_j` in
/// `(0, pi)` by bisection. `g_eval` must be strictly monotone on the
/// open interval; the endpoints are approached but never evaluated at 0
/// or pi exactly, so symbols with endpoint singularities are fine.
///
/// Bisection runs a fixed `4 * bits` iterations (derivative-free, so
/// unbounded endpoint derivatives cannot break it); entries whose final
/// residual exceeds `tol` are reported as failures.
pub fn perfect_grid<T: Scalar>(
    g_eval: impl Fn(&T) -> T,
    spectrum: &SpectrumSample<T>,
    tol: &T,
) -> Result<PerfectGrid<T>> {
    let n = spectrum.n;
    if n == 0 {
        return Err(Error::EmptyInput("spectrum"));
    }
    let bits = spectrum.bits;
    let pi = T::pi(bits);

    // Open-interval endpoints, nudged inward by a precision-sized margin.
    let margin = pi.mul(&T::exp2(-(bits as i64), bits));
    let lo = margin.clone();
    let hi = pi.sub(&margin);
    let g_lo = g_eval(&lo);
    let g_hi = g_eval(&hi);
    if !g_lo.is_finite() {
        return Err(Error::NonFiniteEvaluation {
            theta: lo.to_decimal(),
        });
    }
    if !g_hi.is_finite() {
        return Err(Error::NonFiniteEvaluation {
            theta: hi.to_decimal(),
        });
    }
    let increasing = g_lo < g_hi;

    let iterations = 4 * bits as usize;
    let mut xi = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    let mut failures = 0usize;
    let mut first_failure = 0usize;

    for (idx, lambda) in spectrum.values.iter().enumerate() {
        // bracket check against the sampled range of g
        let (mut a, mut b) = (lo.clone(), hi.clone());
        let fa = g_lo.sub(lambda);
        let fb = g_hi.sub(lambda);
        let bracketed = fa.is_zero() || fb.is_zero() || (fa.is_negative() != fb.is_negative());
        if !bracketed {
            // the eigenvalue may still sit between g(endpoint) and the
            // singular limit; fall through and let the residual decide
            if failures == 0 {
                first_failure = idx;
            }
            failures += 1;
            xi.push(lo.clone());
            residuals.push(fa.abs());
            continue;
        }
        for _ in 0..iterations {
            let mid = a.add(&b).ldexp(-1);
            let fm = g_eval(&mid);
            if !fm.is_finite() {
                return Err(Error::NonFiniteEvaluation {
                    theta: mid.to_decimal(),
                });
            }
            let below = fm < *lambda;
            if below == increasing {
                a = mid;
            } else {
                b = mid;
            }
            if a == b {
                break;
            }
        }
        let root = a.add(&b).ldexp(-1);
        let res = g_eval(&root).sub(lambda).abs();
        if res > *tol {
            if failures == 0 {
                first_failure = idx;
            }
            failures += 1;
        }
        xi.push(root);
        residuals.push(res);
    }

    if failures > 0 {
        return Err(Error::RootNotBracketed {
            count: failures,
            first_index: first_failure,
        });
    }
    Ok(PerfectGrid { n, xi, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::SortOrder;

    #[test]
    fn grid_points_are_increasing_and_h_exact() {
        let g = SampledGrid::<f64>::new(7, 53);
        assert_eq!(g.points.len(), 7);
        for w in g.points.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(g.points[6] < std::f64::consts::PI);
        assert_eq!(g.h * 8.0, 1.0);
    }

    #[test]
    fn cosine_root_at_half_pi() {
        let sp = SpectrumSample::from_real(vec![0.0f64], SortOrder::Ascending, 53);
        let tol = 1e-14;
        let pg = perfect_grid(|t: &f64| t.cos(), &sp, &tol).unwrap();
        assert!((pg.xi[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
        assert!(pg.residuals[0] <= tol);
    }

    #[test]
    fn out_of_range_value_is_flagged() {
        let sp = SpectrumSample::from_real(vec![5.0f64], SortOrder::Ascending, 53);
        let tol = 1e-12;
        match perfect_grid(|t: &f64| t.cos(), &sp, &tol) {
            Err(Error::RootNotBracketed {
                count: 1,
                first_index: 0,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }
}
