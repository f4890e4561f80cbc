//! Recovery of the cosine Fourier coefficients of the distribution
//! function `g` from its samples on the uniform grid.
//!
//! `g` is assumed real and even, so a cosine series suffices. Solving
//! the square collocation system
//!
//! ```text
//! ghat_0 + 2 sum_{k=1}^{n0-1} ghat_k cos(k theta_j) = c0_j
//! ```
//!
//! on the uniform grid recovers `n0` coefficients. If `g` is a real
//! cosine trigonometric polynomial (RCTP) of modest degree, the
//! coefficients past the degree vanish and the exact symbol is
//! recovered; otherwise the result is a truncated Fourier expansion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{ExpansionTable, TableMeta};
use crate::linalg::solve_dense;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Recovered cosine coefficients of `g`, with RCTP classification.
#[derive(Debug, Clone)]
pub struct RecoveredSymbol<T> {
    pub ghat: Vec<T>,
    pub rctp_degree: Option<usize>,
    pub threshold: T,
    pub source: TableMeta,
}

#[derive(Debug, Serialize, Deserialize)]
struct RecoveredFile {
    n0: usize,
    bits: u32,
    threshold: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    rctp_degree: Option<usize>,
    ghat: Vec<String>,
}

impl<T: Scalar> RecoveredSymbol<T> {
    pub fn to_json(&self) -> String {
        let file = RecoveredFile {
            n0: self.ghat.len(),
            bits: self.source.bits,
            threshold: self.threshold.to_decimal(),
            rctp_degree: self.rctp_degree,
            ghat: self.ghat.iter().map(|g| g.to_decimal()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("recovered symbol serialization")
    }
}

/// Default classification threshold: `1e-6` for double-precision
/// extractions, `10^(-bits/8)` above that. Genuine slowly-decaying
/// coefficients sit well above either value.
pub fn default_threshold<T: Scalar>(bits: u32) -> T {
    if bits == 53 {
        T::exp2(-20, bits) // 2^-20 ~ 9.5e-7
    } else {
        let log2 = -(bits as f64) / 8.0 * std::f64::consts::LOG2_10;
        T::exp2(log2.round() as i64, bits)
    }
}

/// Solves the cosine collocation system for the row-0 samples of an
/// extraction table and classifies the result.
pub fn recover<T: Scalar>(table: &ExpansionTable<T>) -> Result<RecoveredSymbol<T>> {
    recover_with_threshold(table, default_threshold(table.bits()))
}

/// [`recover`] with an explicit classification threshold.
pub fn recover_with_threshold<T: Scalar>(
    table: &ExpansionTable<T>,
    threshold: T,
) -> Result<RecoveredSymbol<T>> {
    let c0 = table.row(0);
    let n0 = c0.len();
    if n0 == 0 {
        return Err(Error::EmptyInput("c0 samples"));
    }
    let bits = table.bits();
    let grid = table.grid();
    let two = T::from_int(2, bits);

    let mut g = DenseMatrix::zeros(n0, n0, bits);
    let mut rhs = DenseMatrix::zeros(n0, 1, bits);
    for j in 0..n0 {
        *g.at_mut(j, 0) = T::one(bits);
        let theta = &grid.points[j];
        for k in 1..n0 {
            *g.at_mut(j, k) = two.mul(&T::from_int(k as i64, bits).mul(theta).cos());
        }
        *rhs.at_mut(j, 0) = c0[j].clone();
    }
    let x = solve_dense(&g, &rhs)?;
    let ghat: Vec<T> = (0..n0).map(|k| x.at(k, 0).clone()).collect();

    let mut rs = RecoveredSymbol {
        ghat,
        rctp_degree: None,
        threshold: threshold.clone(),
        source: table.meta().clone(),
    };
    rs.rctp_degree = classify_rctp(&rs, &threshold);
    Ok(rs)
}

/// Smallest degree `m` such that every coefficient past `m` stays below
/// `threshold`, accepted only when `m <= n0/4` (a safety margin: decay
/// that barely clears the tail is not a polynomial, just a function
/// with small high-order coefficients).
pub fn classify_rctp<T: Scalar>(rs: &RecoveredSymbol<T>, threshold: &T) -> Option<usize> {
    let n0 = rs.ghat.len();
    let mut m = 0usize;
    for (k, g) in rs.ghat.iter().enumerate().skip(1) {
        if g.abs() > *threshold {
            m = k;
        }
    }
    if m <= n0 / 4 {
        Some(m)
    } else {
        None
    }
}

/// Partial cosine sum of the recovered series with `k_terms` terms
/// (indices `0..k_terms`). Default: `rctp_degree + 1` terms when the
/// symbol classified as an RCTP, all `n0` otherwise.
pub fn eval_recovered<T: Scalar>(rs: &RecoveredSymbol<T>, theta: &T, k_terms: Option<usize>) -> T {
    let n0 = rs.ghat.len();
    let terms = k_terms
        .unwrap_or_else(|| rs.rctp_degree.map(|m| m + 1).unwrap_or(n0))
        .min(n0)
        .max(1);
    let bits = rs.ghat[0].bits();
    let mut acc = rs.ghat[0].clone();
    for (k, g) in rs.ghat.iter().enumerate().take(terms).skip(1) {
        let ck = T::from_int(k as i64, bits).mul(theta).cos();
        acc = acc.add(&g.ldexp(1).mul(&ck));
    }
    acc
}
