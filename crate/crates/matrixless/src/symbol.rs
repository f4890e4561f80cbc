//! Banded symbols (generating functions) and the Toeplitz matrices they
//! generate.
//!
//! A symbol is the finite Laurent series `f(theta) = sum f_k e^{i k
//! theta}` over the band `k in [-r, s]`; its coefficients form the
//! constant diagonals of `T_n(f)`, entry `(i, j) = f_{i-j}`, so positive
//! indices populate the subdiagonals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{Complex, Scalar};
use crate::spectrum::{SortOrder, SpectrumSample};

/// Fourier coefficients of a banded symbol, stored from `min_k` upward.
/// The band always contains index zero and at least one coefficient is
/// nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Symbol<T> {
    min_k: i64,
    coeffs: Vec<T>,
}

/// On-disk form: coefficients as decimal strings so that any working
/// precision round-trips losslessly.
#[derive(Debug, Serialize, Deserialize)]
struct SymbolFile {
    min_k: i64,
    coeffs: Vec<String>,
}

impl<T: Scalar> Symbol<T> {
    /// Builds a symbol from the coefficients `f_{min_k}, f_{min_k+1}, ...`.
    pub fn new(min_k: i64, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::EmptySymbol);
        }
        let max_k = min_k + coeffs.len() as i64 - 1;
        if min_k > 0 || max_k < 0 {
            return Err(Error::BandExcludesZero { min_k, max_k });
        }
        Ok(Symbol { min_k, coeffs })
    }

    /// Parses decimal-string coefficients at `bits` precision. Strings,
    /// not binary doubles, so that high-precision runs are never
    /// contaminated by 53-bit literals.
    pub fn from_decimal(min_k: i64, coeffs: &[&str], bits: u32) -> Result<Self> {
        let parsed: Result<Vec<T>> = coeffs.iter().map(|s| T::parse_decimal(s, bits)).collect();
        Symbol::new(min_k, parsed?)
    }

    pub fn min_k(&self) -> i64 {
        self.min_k
    }

    pub fn max_k(&self) -> i64 {
        self.min_k + self.coeffs.len() as i64 - 1
    }

    /// Coefficient `f_k`, zero outside the band.
    pub fn coeff(&self, k: i64) -> Option<&T> {
        if k < self.min_k || k > self.max_k() {
            None
        } else {
            Some(&self.coeffs[(k - self.min_k) as usize])
        }
    }

    pub fn bits(&self) -> u32 {
        self.coeffs[0].bits()
    }

    /// Reads the JSON document `{"min_k": int, "coeffs": [string, ...]}`.
    pub fn from_json(text: &str, bits: u32) -> Result<Self> {
        let file: SymbolFile = serde_json::from_str(text)?;
        let parsed: Result<Vec<T>> = file
            .coeffs
            .iter()
            .map(|s| T::parse_decimal(s, bits))
            .collect();
        Symbol::new(file.min_k, parsed?)
    }

    pub fn to_json(&self) -> String {
        let file = SymbolFile {
            min_k: self.min_k,
            coeffs: self.coeffs.iter().map(|c| c.to_decimal()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("symbol serialization")
    }

    fn is_tridiagonal_band(&self) -> bool {
        self.min_k == -1 && self.coeffs.len() == 3
    }
}

/// Dense `n x n` Toeplitz matrix with entry `(i, j) = f_{i-j}`.
pub fn build_toeplitz<T: Scalar>(s: &Symbol<T>, n: usize) -> DenseMatrix<T> {
    let bits = s.bits();
    let mut m = DenseMatrix::zeros(n, n, bits);
    for i in 0..n {
        for j in 0..n {
            if let Some(c) = s.coeff(i as i64 - j as i64) {
                *m.at_mut(i, j) = c.clone();
            }
        }
    }
    m
}

/// Evaluates `f(theta) = sum f_k e^{i k theta}` over the band.
pub fn eval_symbol<T: Scalar>(s: &Symbol<T>, theta: &T) -> Complex<T> {
    let bits = s.bits();
    let mut re = T::zero(bits);
    let mut im = T::zero(bits);
    for k in s.min_k()..=s.max_k() {
        let c = s.coeff(k).expect("inside band");
        if c.is_zero() {
            continue;
        }
        let kt = T::from_int(k, bits).mul(theta);
        re = re.add(&c.mul(&kt.cos()));
        im = im.add(&c.mul(&kt.sin()));
    }
    Complex::new(re, im)
}

/// Symmetrizes a tridiagonal symbol: for band `{-1, 0, 1}` with
/// `f_1 * f_{-1} > 0` there is a diagonal similarity taking `T_n(f)` to
/// `T_n(g)` with `g(theta) = f_0 + 2 sqrt(f_1) sqrt(f_{-1}) cos(theta)`,
/// so both matrices share their spectrum. The coefficient
/// `g_1 = sqrt(f_1) sqrt(f_{-1})` keeps the sign of `f_1` (principal
/// square roots: two negative coefficients produce a negative product).
pub fn symmetrize_tridiagonal<T: Scalar>(s: &Symbol<T>) -> Result<Symbol<T>> {
    if !s.is_tridiagonal_band() {
        return Err(Error::NotTridiagonal);
    }
    let f1 = s.coeff(1).expect("band");
    let fm1 = s.coeff(-1).expect("band");
    let product = f1.mul(fm1);
    if product.is_zero() || product.is_negative() {
        return Err(Error::ComplexSymmetrization {
            product: product.to_decimal(),
        });
    }
    let mut g1 = product.sqrt();
    if f1.is_negative() {
        g1 = g1.neg();
    }
    Symbol::new(-1, vec![g1.clone(), s.coeff(0).expect("band").clone(), g1])
}

/// Exact spectrum of a symmetrizable tridiagonal Toeplitz matrix:
/// samples the symmetrized symbol on the uniform grid
/// `theta_{j,n} = j pi/(n+1)` and sorts ascending.
pub fn tridiag_exact_eigenvalues<T: Scalar>(s: &Symbol<T>, n: usize) -> Result<SpectrumSample<T>> {
    let g = symmetrize_tridiagonal(s)?;
    let bits = s.bits();
    let pi = T::pi(bits);
    let np1 = T::from_int(n as i64 + 1, bits);
    let g0 = g.coeff(0).expect("band");
    let g1 = g.coeff(1).expect("band");
    let two_g1 = g1.ldexp(1);
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let theta = T::from_int(j as i64, bits).mul(&pi).div(&np1);
        values.push(g0.add(&two_g1.mul(&theta.cos())));
    }
    Ok(SpectrumSample::from_real(
        values,
        SortOrder::Ascending,
        bits,
    ))
}
