//! Matrix-less spectral analysis of banded Toeplitz matrix sequences.
//!
//! A banded symbol `f` generates the Toeplitz family `{T_n(f)}`. When
//! `f` is complex-valued but every `T_n(f)` still has a real spectrum,
//! the eigenvalues are described not by `f` but by an unknown real
//! distribution function `g`, together with higher-order correction
//! functions `c_k` in the expansion
//!
//! ```text
//! lambda_j(T_n(f)) = sum_k c_k(theta_{j,n}) h^k + O(h^{alpha+1}),
//! h = 1/(n+1),  theta_{j,n} = j pi/(n+1),  c_0 = g.
//! ```
//!
//! This crate approximates the `c_k` from a handful of small
//! eigenproblems on nested grids, recovers the cosine Fourier
//! coefficients of `g`, and predicts spectra of arbitrarily large
//! `T_n(f)` without ever forming the large matrix. The dense solves run
//! at a configurable significand precision, because standard double
//! precision eigensolvers return pseudospectral (wrong) eigenvalues for
//! these non-normal matrices.
//!
//! Start with [`Symbol`], [`extract`], [`recover`] and [`predict`].

// The dense kernels are ports of index-based algorithms; iterator
// rewrites of their triple loops would only obscure them.
#![allow(clippy::needless_range_loop)]

mod context;
mod error;
mod expansion;
mod grids;
mod linalg;
mod matrix;
mod predict;
mod quadrature;
mod recovery;
mod scalar;
mod spectrum;
mod symbol;

pub use context::PrecisionContext;
pub use error::{Error, Result};
pub use expansion::{
    extract, extract_with_progress, nested_sizes, sample_eigenvalues, vandermonde_solve,
    ExpansionTable, LevelReport, TableMeta,
};
pub use grids::{perfect_grid, PerfectGrid, SampledGrid};
pub use linalg::{balance, eigenvalues, solve_dense};
pub use matrix::DenseMatrix;
pub use predict::{
    compare, effective_degree, interpolate_row, predict, ErrorReport, PredictedSpectrum,
    DEFAULT_INTERP_DEGREE,
};
pub use quadrature::fourier_coefficients_by_quadrature;
pub use recovery::{
    classify_rctp, default_threshold, eval_recovered, recover, recover_with_threshold,
    RecoveredSymbol,
};
pub use scalar::{Big, Complex, Scalar};
pub use spectrum::{project_real_sorted, SortOrder, SpectrumSample};
pub use symbol::{
    build_toeplitz, eval_symbol, symmetrize_tridiagonal, tridiag_exact_eigenvalues, Symbol,
};
