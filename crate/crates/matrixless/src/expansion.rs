//! Extraction of the expansion functions `c_k` on the base grid
//! `theta_{j,n0}` from `alpha + 1` small eigenproblems on nested grids.
//!
//! The grids nest exactly: with `n_k = 2^k (n0 + 1) - 1` we have
//! `theta_{2^k j, n_k} = theta_{j, n0}`, so the sorted spectrum of each
//! level, subsampled at stride `2^k`, sits on the shared base grid. A
//! small Vandermonde solve in powers of `h_k = 1/(n_k + 1)` then
//! separates the orders: row `k` of the result approximates `c_k` with
//! error `O(h_0^(alpha+1-k))`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::context::PrecisionContext;
use crate::error::{Error, Result};
use crate::grids::SampledGrid;
use crate::linalg::{eigenvalues, solve_dense};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::spectrum::{project_real_sorted, SortOrder};
use crate::symbol::{build_toeplitz, Symbol};

/// Provenance of an extraction run; doubles as the JSON sidecar format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableMeta {
    pub n0: usize,
    pub alpha: usize,
    pub bits: u32,
    pub order: SortOrder,
    pub sizes: Vec<usize>,
}

/// The `(alpha+1) x n0` matrix of approximations `c_k(theta_{j,n0})`,
/// row `k` holding `c_k`; row 0 is the distribution function `g`.
#[derive(Debug, Clone)]
pub struct ExpansionTable<T> {
    meta: TableMeta,
    c: DenseMatrix<T>,
}

/// Completion notice for one extraction level, for progress reporting.
#[derive(Debug, Clone)]
pub struct LevelReport {
    pub level: usize,
    pub levels: usize,
    pub size: usize,
    pub elapsed: Duration,
}

impl<T: Scalar> ExpansionTable<T> {
    pub fn meta(&self) -> &TableMeta {
        &self.meta
    }

    pub fn n0(&self) -> usize {
        self.meta.n0
    }

    pub fn alpha(&self) -> usize {
        self.meta.alpha
    }

    pub fn bits(&self) -> u32 {
        self.meta.bits
    }

    pub fn order(&self) -> SortOrder {
        self.meta.order
    }

    /// Row `k`: the samples `c_k(theta_{j,n0})`, `j = 1..n0`.
    pub fn row(&self, k: usize) -> &[T] {
        self.c.row(k)
    }

    pub fn grid(&self) -> SampledGrid<T> {
        SampledGrid::new(self.meta.n0, self.meta.bits)
    }

    /// Largest magnitude in row `k`.
    pub fn row_max_abs(&self, k: usize) -> T {
        let mut best = T::zero(self.meta.bits);
        for v in self.row(k) {
            best = best.max_val(&v.abs());
        }
        best
    }

    /// Whether row 0 is monotone in the direction the run requested.
    /// Non-monotone distribution functions are outside the method's
    /// working hypothesis, so callers warn rather than fail.
    pub fn row0_monotone(&self) -> bool {
        let row = self.row(0);
        match self.meta.order {
            SortOrder::Ascending => row.windows(2).all(|w| w[0] <= w[1]),
            SortOrder::Descending => row.windows(2).all(|w| w[0] >= w[1]),
        }
    }

    /// CSV with header `theta,c0,...,c_alpha`, one row per grid point,
    /// every value a full-precision decimal string.
    pub fn to_csv(&self) -> String {
        let grid = self.grid();
        let mut out = String::from("theta");
        for k in 0..=self.meta.alpha {
            out.push_str(&format!(",c{k}"));
        }
        out.push('\n');
        for j in 0..self.meta.n0 {
            out.push_str(&grid.points[j].to_decimal());
            for k in 0..=self.meta.alpha {
                out.push(',');
                out.push_str(&self.row(k)[j].to_decimal());
            }
            out.push('\n');
        }
        out
    }

    /// JSON sidecar carrying the provenance.
    pub fn meta_json(&self) -> String {
        serde_json::to_string_pretty(&self.meta).expect("meta serialization")
    }

    /// Reads a table back from its CSV and sidecar.
    pub fn from_csv(csv: &str, meta_json: &str) -> Result<Self> {
        let meta: TableMeta = serde_json::from_str(meta_json)?;
        let mut lines = csv.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("empty csv".into()))?;
        let cols = header.split(',').count();
        if cols != meta.alpha + 2 {
            return Err(Error::MalformedTable(format!(
                "expected {} columns, found {cols}",
                meta.alpha + 2
            )));
        }
        let mut c = DenseMatrix::zeros(meta.alpha + 1, meta.n0, meta.bits);
        let mut rows = 0usize;
        for (j, line) in lines.enumerate() {
            if j >= meta.n0 {
                return Err(Error::MalformedTable("more rows than n0".into()));
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != cols {
                return Err(Error::MalformedTable(format!(
                    "row {j} has {} fields",
                    fields.len()
                )));
            }
            for k in 0..=meta.alpha {
                *c.at_mut(k, j) = T::parse_decimal(fields[k + 1], meta.bits)?;
            }
            rows += 1;
        }
        if rows != meta.n0 {
            return Err(Error::MalformedTable(format!(
                "expected {} rows, found {rows}",
                meta.n0
            )));
        }
        Ok(ExpansionTable { meta, c })
    }

    /// Assembles a table from a precomputed coefficient matrix. The
    /// matrix must be `(alpha+1) x n0`.
    pub fn from_parts(meta: TableMeta, c: DenseMatrix<T>) -> Result<Self> {
        if c.rows() != meta.alpha + 1 || c.cols() != meta.n0 {
            return Err(Error::DimensionMismatch {
                expected: (meta.alpha + 1) * meta.n0,
                got: c.rows() * c.cols(),
            });
        }
        Ok(ExpansionTable { meta, c })
    }
}

/// Matrix orders of the nested levels: `n_k = 2^k (n0 + 1) - 1` for
/// `k = 0..=alpha`.
pub fn nested_sizes(n0: usize, alpha: usize) -> Result<Vec<usize>> {
    let mut sizes = Vec::with_capacity(alpha + 1);
    for k in 0..=alpha {
        let size = (n0 + 1)
            .checked_shl(k as u32)
            .and_then(|v| v.checked_sub(1))
            .filter(|v| *v < (1usize << 40))
            .ok_or(Error::SizeOverflow(n0))?;
        sizes.push(size);
    }
    Ok(sizes)
}

/// Eigenvalue samples on the shared grid: row `k` holds the sorted
/// spectrum of `T_{n_k}(f)`, subsampled at stride `2^k`.
///
/// Levels run concurrently; results are assembled in level order, so
/// the output is deterministic.
pub fn sample_eigenvalues<T: Scalar>(
    s: &Symbol<T>,
    n0: usize,
    alpha: usize,
    ctx: &PrecisionContext,
    order: SortOrder,
) -> Result<DenseMatrix<T>> {
    sample_eigenvalues_with(s, n0, alpha, ctx, order, None)
}

fn sample_eigenvalues_with<T: Scalar>(
    s: &Symbol<T>,
    n0: usize,
    alpha: usize,
    ctx: &PrecisionContext,
    order: SortOrder,
    progress: Option<&(dyn Fn(LevelReport) + Sync)>,
) -> Result<DenseMatrix<T>> {
    if n0 == 0 {
        return Err(Error::EmptyInput("n0"));
    }
    ctx.check_scalar::<T>()?;
    let sizes = nested_sizes(n0, alpha)?;
    let levels = alpha + 1;

    let level_rows: Vec<Result<Vec<T>>> = std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(levels);
        for (k, nk) in sizes.iter().enumerate() {
            let nk = *nk;
            handles.push(scope.spawn(move || -> Result<Vec<T>> {
                let started = Instant::now();
                let t = build_toeplitz(s, nk);
                let eigs = eigenvalues(&t, ctx)?;
                let sample = project_real_sorted(&eigs, ctx, order)?;
                let stride = 1usize << k;
                let row: Vec<T> = (1..=n0)
                    .map(|j| sample.values[j * stride - 1].clone())
                    .collect();
                if let Some(report) = progress {
                    report(LevelReport {
                        level: k,
                        levels,
                        size: nk,
                        elapsed: started.elapsed(),
                    });
                }
                Ok(row)
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("level thread"))
            .collect()
    });

    let mut e = DenseMatrix::zeros(levels, n0, ctx.bits());
    for (k, row) in level_rows.into_iter().enumerate() {
        for (j, v) in row?.into_iter().enumerate() {
            *e.at_mut(k, j) = v;
        }
    }
    Ok(e)
}

/// Solves the `(alpha+1)^2` Vandermonde system `V C = E` columnwise,
/// where `V[i][j] = hs[i]^j`. `hs` must be strictly decreasing and
/// positive.
pub fn vandermonde_solve<T: Scalar>(hs: &[T], e: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let levels = hs.len();
    if levels == 0 {
        return Err(Error::EmptyInput("spacings"));
    }
    if e.rows() != levels {
        return Err(Error::DimensionMismatch {
            expected: levels,
            got: e.rows(),
        });
    }
    for (i, w) in hs.windows(2).enumerate() {
        if w[1] >= w[0] {
            return Err(Error::DuplicateSpacing { index: i + 1 });
        }
    }
    if hs[levels - 1].is_zero() || hs[levels - 1].is_negative() {
        return Err(Error::DuplicateSpacing { index: levels - 1 });
    }
    let bits = hs[0].bits();
    let mut v = DenseMatrix::zeros(levels, levels, bits);
    for i in 0..levels {
        for j in 0..levels {
            *v.at_mut(i, j) = hs[i].powi(j as u32);
        }
    }
    solve_dense(&v, e)
}

/// Full extraction: eigenvalue sampling on the nested grids followed by
/// the Vandermonde separation. See the module docs for the error orders.
pub fn extract<T: Scalar>(
    s: &Symbol<T>,
    n0: usize,
    alpha: usize,
    ctx: &PrecisionContext,
    order: SortOrder,
) -> Result<ExpansionTable<T>> {
    extract_with_progress(s, n0, alpha, ctx, order, None)
}

/// [`extract`] with a per-level completion callback (used by the CLI to
/// report progress on long high-precision runs).
pub fn extract_with_progress<T: Scalar>(
    s: &Symbol<T>,
    n0: usize,
    alpha: usize,
    ctx: &PrecisionContext,
    order: SortOrder,
    progress: Option<&(dyn Fn(LevelReport) + Sync)>,
) -> Result<ExpansionTable<T>> {
    let sizes = nested_sizes(n0, alpha)?;
    let e = sample_eigenvalues_with(s, n0, alpha, ctx, order, progress)?;
    let bits = ctx.bits();
    let hs: Vec<T> = sizes
        .iter()
        .map(|nk| T::one(bits).div(&T::from_int(*nk as i64 + 1, bits)))
        .collect();
    let c = vandermonde_solve(&hs, &e)?;
    let meta = TableMeta {
        n0,
        alpha,
        bits,
        order,
        sizes,
    };
    Ok(ExpansionTable { meta, c })
}
