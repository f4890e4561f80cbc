//! Working-precision configuration shared by every numeric operation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Significand precision plus the tolerances derived from it.
///
/// A context with `bits = 53` selects native IEEE double arithmetic
/// (`f64`); any other value selects software floats with at least that
/// many mantissa bits. The unit roundoff is `eps = 2^(1-bits)`.
///
/// The realness tolerance governs when a computed spectrum with small
/// imaginary parts is accepted as real. By default it is
/// `2^(-bits/2) * max(1, spectral radius estimate)`, reflecting that
/// shifted-QR on ill-conditioned problems loses roughly half the digits;
/// it can be overridden with [`PrecisionContext::with_realness_tol`].
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionContext {
    bits: u32,
    realness_tol_log2: i64,
}

impl PrecisionContext {
    /// Context for `bits` significand bits. `bits` must be 53 (native
    /// doubles) or at least 64.
    pub fn new(bits: u32) -> Result<Self> {
        if bits != 53 && bits < 64 {
            return Err(Error::InvalidPrecision { bits });
        }
        Ok(PrecisionContext {
            bits,
            realness_tol_log2: -(bits as i64) / 2,
        })
    }

    /// Native double precision (53 bits).
    pub fn double() -> Self {
        PrecisionContext::new(53).expect("53 bits is always valid")
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Unit roundoff `2^(1-bits)` in the scalar type of the caller.
    pub fn eps<T: Scalar>(&self) -> T {
        T::exp2(1 - self.bits as i64, self.bits)
    }

    /// Override the realness tolerance with `2^log2_tol` (the scale
    /// factor `max(1, spectral radius)` still applies at check time).
    /// The tolerance must stay at or above the unit roundoff.
    pub fn with_realness_tol(mut self, log2_tol: i64) -> Result<Self> {
        if log2_tol < 1 - self.bits as i64 {
            return Err(Error::InvalidRealnessTol);
        }
        self.realness_tol_log2 = log2_tol;
        Ok(self)
    }

    /// Base realness tolerance `2^k` (before scaling by the spectral
    /// radius estimate).
    pub fn realness_tol<T: Scalar>(&self) -> T {
        T::exp2(self.realness_tol_log2, self.bits)
    }

    /// Checks that the scalar type `T` matches this context: `f64` is
    /// the only type valid at 53 bits, software floats everywhere else.
    pub fn check_scalar<T: Scalar>(&self) -> Result<()> {
        match T::NATIVE_BITS {
            Some(b) if b != self.bits => Err(Error::PrecisionMismatch {
                type_bits: b,
                ctx_bits: self.bits,
            }),
            None if self.bits == 53 => Err(Error::PrecisionMismatch {
                type_bits: 64,
                ctx_bits: self.bits,
            }),
            _ => Ok(()),
        }
    }
}
