//! Matrix-less spectrum prediction: evaluate the expansion at any
//! target order from a fixed extraction table, never forming the large
//! matrix.

use crate::error::{Error, Result};
use crate::expansion::{ExpansionTable, TableMeta};
use crate::scalar::Scalar;
use crate::spectrum::SpectrumSample;

/// Default local interpolation degree.
pub const DEFAULT_INTERP_DEGREE: usize = 4;

/// Spectrum approximation `lambda_j ~ sum_k c_k(theta_{j,n}) h^k` for a
/// target order `n`, produced from a table alone in `O(n alpha d)`.
#[derive(Debug, Clone)]
pub struct PredictedSpectrum<T> {
    pub n: usize,
    pub values: Vec<T>,
    pub source: TableMeta,
    pub interp_degree: usize,
}

impl<T: Scalar> PredictedSpectrum<T> {
    /// CSV `j,theta,lambda` with full-precision decimal strings.
    pub fn to_csv(&self) -> String {
        let bits = self.source.bits;
        let pi = T::pi(bits);
        let np1 = T::from_int(self.n as i64 + 1, bits);
        let mut out = String::from("j,theta,lambda\n");
        for (j, v) in self.values.iter().enumerate() {
            let theta = T::from_int(j as i64 + 1, bits).mul(&pi).div(&np1);
            out.push_str(&format!(
                "{},{},{}\n",
                j + 1,
                theta.to_decimal(),
                v.to_decimal()
            ));
        }
        out
    }
}

/// Effective stencil degree for a table: the requested degree, clamped
/// when the base grid is too small to supply `degree + 1` nodes.
pub fn effective_degree(n0: usize, degree: usize) -> usize {
    degree.min(n0.saturating_sub(1))
}

/// Index of the first node of the `d+1`-point stencil nearest `theta`.
fn stencil_start<T: Scalar>(points: &[T], theta: &T, d: usize) -> usize {
    let n0 = points.len();
    // first grid point >= theta
    let mut hi = points.partition_point(|p| p < theta);
    // center the window, clamped to the grid
    let half = d.div_ceil(2);
    if hi > half {
        hi -= half;
    } else {
        hi = 0;
    }
    hi.min(n0 - (d + 1))
}

/// Local Lagrange interpolation of row `k` at `theta in (0, pi)`,
/// exact when `theta` hits a grid point. Near the interval ends the
/// stencil goes one-sided; it never extrapolates outside `(0, pi)`.
pub fn interpolate_row<T: Scalar>(
    table: &ExpansionTable<T>,
    k: usize,
    theta: &T,
    degree: usize,
) -> T {
    let grid = table.grid();
    let d = effective_degree(table.n0(), degree);
    let start = stencil_start(&grid.points, theta, d);
    let row = table.row(k);
    lagrange(
        &grid.points[start..=start + d],
        &row[start..=start + d],
        theta,
    )
}

fn lagrange<T: Scalar>(xs: &[T], ys: &[T], x: &T) -> T {
    // node collocation is exact by construction
    if let Some(i) = xs.iter().position(|xj| xj == x) {
        return ys[i].clone();
    }
    let bits = x.bits();
    let mut acc = T::zero(bits);
    for (i, yi) in ys.iter().enumerate() {
        let mut w = yi.clone();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            w = w.mul(&x.sub(xj)).div(&xs[i].sub(xj));
        }
        acc = acc.add(&w);
    }
    acc
}

/// Predicts the spectrum of the order-`n` Toeplitz matrix from the
/// table: `lambda_j = sum_k c_k(theta_{j,n}) h^k`, `h = 1/(n+1)`.
///
/// All rows share one stencil per target point, so the cost is
/// `O(n (d^2 + d alpha))` and no matrix of order `n` is ever built.
pub fn predict<T: Scalar>(
    table: &ExpansionTable<T>,
    n: usize,
    degree: usize,
) -> Result<PredictedSpectrum<T>> {
    if n == 0 {
        return Err(Error::EmptyInput("target order"));
    }
    let bits = table.bits();
    let alpha = table.alpha();
    let d = effective_degree(table.n0(), degree);
    let grid = table.grid();
    let pi = T::pi(bits);
    let np1 = T::from_int(n as i64 + 1, bits);
    let h = T::one(bits).div(&np1);

    let mut values = Vec::with_capacity(n);
    let mut weights = vec![T::zero(bits); d + 1];
    for j in 1..=n {
        let theta = T::from_int(j as i64, bits).mul(&pi).div(&np1);
        let start = stencil_start(&grid.points, &theta, d);
        let xs = &grid.points[start..=start + d];
        // Lagrange basis weights at theta, shared by all rows
        for (i, w) in weights.iter_mut().enumerate() {
            let mut acc = T::one(bits);
            let mut hit_node = false;
            for (jj, xj) in xs.iter().enumerate() {
                if i == jj {
                    continue;
                }
                let dx = theta.sub(xj);
                if dx.is_zero() {
                    hit_node = true;
                    break;
                }
                acc = acc.mul(&dx).div(&xs[i].sub(xj));
            }
            *w = if hit_node { T::zero(bits) } else { acc };
        }
        // exact collocation when theta is a node
        let node = xs.iter().position(|xj| xj == &theta);
        let mut lambda = T::zero(bits);
        let mut hk = T::one(bits);
        for k in 0..=alpha {
            let row = &table.row(k)[start..=start + d];
            let ck = match node {
                Some(i) => row[i].clone(),
                None => {
                    let mut s = T::zero(bits);
                    for (w, y) in weights.iter().zip(row) {
                        s = s.add(&w.mul(y));
                    }
                    s
                }
            };
            lambda = lambda.add(&ck.mul(&hk));
            if k < alpha {
                hk = hk.mul(&h);
            }
        }
        values.push(lambda);
    }
    Ok(PredictedSpectrum {
        n,
        values,
        source: table.meta().clone(),
        interp_degree: d,
    })
}

/// Deviation report between a prediction and a reference spectrum.
#[derive(Debug, Clone)]
pub struct ErrorReport<T> {
    pub n: usize,
    pub abs_errors: Vec<T>,
    pub max_abs: T,
    pub mean_abs: T,
    /// Set when the reference was computed below 128 bits: for
    /// non-normal matrices such a reference may itself be
    /// pseudospectral rather than true.
    pub low_precision_reference: bool,
}

/// Per-index deviation between a prediction and a reference spectrum of
/// the same order.
pub fn compare<T: Scalar>(
    pred: &PredictedSpectrum<T>,
    reference: &SpectrumSample<T>,
) -> Result<ErrorReport<T>> {
    if pred.n != reference.n {
        return Err(Error::DimensionMismatch {
            expected: pred.n,
            got: reference.n,
        });
    }
    let bits = pred.source.bits;
    let mut abs_errors = Vec::with_capacity(pred.n);
    let mut max_abs = T::zero(bits);
    let mut sum = T::zero(bits);
    for (p, r) in pred.values.iter().zip(&reference.values) {
        let e = p.sub(r).abs();
        max_abs = max_abs.max_val(&e);
        sum = sum.add(&e);
        abs_errors.push(e);
    }
    let mean_abs = sum.div(&T::from_int(pred.n as i64, bits));
    Ok(ErrorReport {
        n: pred.n,
        abs_errors,
        max_abs,
        mean_abs,
        low_precision_reference: reference.bits < 128,
    })
}
