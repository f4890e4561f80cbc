//! Real spectra with ordering metadata, and the projection gate that
//! rejects spectra with significant imaginary parts.

use serde::{Deserialize, Serialize};

use crate::context::PrecisionContext;
use crate::error::{Error, Result};
use crate::scalar::{Complex, Scalar};

/// Eigenvalue ordering convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SortOrder {
    Ascending,
    Descending,
}

impl SortOrder {
    pub fn flip(self) -> SortOrder {
        match self {
            SortOrder::Ascending => SortOrder::Descending,
            SortOrder::Descending => SortOrder::Ascending,
        }
    }
}

impl std::fmt::Display for SortOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SortOrder::Ascending => write!(f, "ascending"),
            SortOrder::Descending => write!(f, "descending"),
        }
    }
}

/// Sorted real eigenvalues of one matrix, with the precision they were
/// computed at and the largest imaginary part discarded on the way.
#[derive(Debug, Clone)]
pub struct SpectrumSample<T> {
    pub n: usize,
    pub values: Vec<T>,
    pub order: SortOrder,
    pub bits: u32,
    pub max_imag_discarded: T,
}

impl<T: Scalar> SpectrumSample<T> {
    /// Builds a sample from already-real values (a closed form, say),
    /// sorting them into the requested order.
    pub fn from_real(mut values: Vec<T>, order: SortOrder, bits: u32) -> Self {
        sort_into(&mut values, order);
        let n = values.len();
        SpectrumSample {
            n,
            values,
            order,
            bits,
            max_imag_discarded: T::zero(bits),
        }
    }
}

fn sort_into<T: Scalar>(values: &mut [T], order: SortOrder) {
    values.sort_by(|a, b| a.total_cmp(b));
    if order == SortOrder::Descending {
        values.reverse();
    }
}

/// Drops imaginary parts and sorts, provided every `|Im|` stays within
/// `realness_tol * max(1, max |lambda|)`. Any offender aborts the whole
/// projection: the computed spectrum is then pseudospectral garbage and
/// the caller must raise the precision or shrink the problem.
pub fn project_real_sorted<T: Scalar>(
    eigs: &[Complex<T>],
    ctx: &PrecisionContext,
    order: SortOrder,
) -> Result<SpectrumSample<T>> {
    if eigs.is_empty() {
        return Err(Error::EmptyInput("eigenvalue list"));
    }
    ctx.check_scalar::<T>()?;
    let bits = ctx.bits();
    let one = T::one(bits);

    let mut scale = one.clone();
    for e in eigs {
        scale = scale.max_val(&e.modulus());
    }
    let tol = ctx.realness_tol::<T>().mul(&scale);

    let mut worst = T::zero(bits);
    let mut worst_index = 0usize;
    for (i, e) in eigs.iter().enumerate() {
        let im = e.im.abs();
        if im > worst {
            worst = im;
            worst_index = i;
        }
    }
    if worst > tol {
        return Err(Error::SpectrumNotReal {
            order: eigs.len(),
            bits,
            index: worst_index,
            imag: worst.to_decimal(),
            tol: tol.to_decimal(),
        });
    }

    let mut values: Vec<T> = eigs.iter().map(|e| e.re.clone()).collect();
    sort_into(&mut values, order);
    Ok(SpectrumSample {
        n: eigs.len(),
        values,
        order,
        bits,
        max_imag_discarded: worst,
    })
}
