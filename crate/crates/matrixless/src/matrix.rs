//! Dense row-major matrix storage.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix with entries at the working precision.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize, bits: u32) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(bits); rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn identity(n: usize, bits: u32) -> Self {
        let mut m = Self::zeros(n, n, bits);
        for i in 0..n {
            *m.at_mut(i, i) = T::one(bits);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Order of a square matrix; errors on rectangular input.
    pub fn order(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// First non-finite entry, if any.
    pub fn check_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.at(i, j).is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of nonzero subdiagonals: 0 for upper triangular, 1 for
    /// upper Hessenberg, `n-1` in general.
    pub fn lower_bandwidth(&self) -> usize {
        let mut band = 0;
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                if !self.at(i, j).is_zero() {
                    band = band.max(i - j);
                    break;
                }
            }
        }
        band
    }

    /// Max row sum norm.
    pub fn norm_inf(&self) -> T {
        let bits = self.data.first().map(|x| x.bits()).unwrap_or(53);
        let mut best = T::zero(bits);
        for i in 0..self.rows {
            let mut s = T::zero(bits);
            for j in 0..self.cols {
                s = s.add(&self.at(i, j).abs());
            }
            best = best.max_val(&s);
        }
        best
    }

    /// Infinity norm of `self * x - b`, the residual of a solve.
    pub fn residual_inf(&self, x: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<T> {
        let n = self.order()?;
        if x.rows != n || b.rows != n || x.cols != b.cols {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.rows,
            });
        }
        let bits = self.data.first().map(|v| v.bits()).unwrap_or(53);
        let mut worst = T::zero(bits);
        for i in 0..n {
            for c in 0..x.cols {
                let mut s = b.at(i, c).neg();
                for k in 0..n {
                    s = s.add(&self.at(i, k).mul(x.at(k, c)));
                }
                worst = worst.max_val(&s.abs());
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[f64]) -> DenseMatrix<f64> {
        DenseMatrix::from_vec(rows, cols, v.to_vec()).unwrap()
    }

    #[test]
    fn bandwidth_detection() {
        let tri = m(3, 3, &[2.0, -2.0, 0.0, -1.0, 2.0, -2.0, 0.0, -1.0, 2.0]);
        assert_eq!(tri.lower_bandwidth(), 1);
        assert!(!tri.is_symmetric());
        let full = m(3, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 7.0, 0.0, 1.0]);
        assert_eq!(full.lower_bandwidth(), 2);
    }

    #[test]
    fn symmetric_detection() {
        let s = m(2, 2, &[1.0, 3.0, 3.0, 5.0]);
        assert!(s.is_symmetric());
        assert_eq!(s.norm_inf(), 8.0);
    }

    #[test]
    fn finite_check_reports_position() {
        let mut a = DenseMatrix::<f64>::identity(2, 53);
        *a.at_mut(1, 0) = f64::NAN;
        match a.check_finite() {
            Err(Error::NonFiniteEntry { row: 1, col: 0 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }
}
