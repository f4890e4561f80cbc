//! Real scalar arithmetic at configurable precision.
//!
//! Every algorithm in this crate is generic over [`Scalar`], which has
//! exactly two implementations: native `f64` for 53-bit contexts, and
//! [`Big`] (software floating point) for everything above. Values know
//! their own precision; binary operations of mixed precision round to
//! the wider operand.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    // Cache of computed constants (pi and friends), per thread.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Real number at a fixed significand precision.
///
/// The trait deliberately uses method calls (`a.mul(&b)`) instead of
/// operator overloading so that generic kernels stay explicit about
/// every rounding operation.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// `Some(bits)` when the type has one fixed precision (`f64`), else `None`.
    const NATIVE_BITS: Option<u32>;

    fn bits(&self) -> u32;
    fn zero(bits: u32) -> Self;
    fn one(bits: u32) -> Self;
    fn from_int(v: i64, bits: u32) -> Self;
    /// Exact power of two `2^k`.
    fn exp2(k: i64, bits: u32) -> Self;
    fn pi(bits: u32) -> Self;

    /// Parses a decimal string, rounding once to `bits` precision.
    fn parse_decimal(s: &str, bits: u32) -> Result<Self>;
    /// Decimal representation that parses back to the identical value.
    fn to_decimal(&self) -> String;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn cos(&self) -> Self;
    fn sin(&self) -> Self;
    fn asin(&self) -> Self;
    /// `sqrt(self^2 + rhs^2)` without overflow of the square.
    fn hypot(&self, rhs: &Self) -> Self;
    /// Integer power with nonnegative exponent.
    fn powi(&self, n: u32) -> Self;
    /// Exact scaling by `2^k`.
    fn ldexp(&self, k: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_finite(&self) -> bool;
    fn is_negative(&self) -> bool;

    /// Nearest double, for diagnostics and coarse heuristics only.
    fn to_f64(&self) -> f64;

    fn total_cmp(&self, rhs: &Self) -> Ordering {
        self.partial_cmp(rhs)
            .expect("comparison of non-finite scalars")
    }

    fn max_val(&self, rhs: &Self) -> Self {
        if self.total_cmp(rhs) == Ordering::Less {
            rhs.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for f64 {
    const NATIVE_BITS: Option<u32> = Some(53);

    fn bits(&self) -> u32 {
        53
    }
    fn zero(_bits: u32) -> Self {
        0.0
    }
    fn one(_bits: u32) -> Self {
        1.0
    }
    fn from_int(v: i64, _bits: u32) -> Self {
        v as f64
    }
    fn exp2(k: i64, _bits: u32) -> Self {
        (k as f64).exp2()
    }
    fn pi(_bits: u32) -> Self {
        std::f64::consts::PI
    }

    fn parse_decimal(s: &str, _bits: u32) -> Result<Self> {
        s.trim().parse::<f64>().map_err(|_| Error::ParseNumber {
            text: s.to_string(),
        })
    }
    fn to_decimal(&self) -> String {
        // `{:?}` is the shortest representation that round-trips.
        format!("{self:?}")
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn asin(&self) -> Self {
        f64::asin(*self)
    }
    fn hypot(&self, rhs: &Self) -> Self {
        f64::hypot(*self, *rhs)
    }
    fn powi(&self, n: u32) -> Self {
        f64::powi(*self, n as i32)
    }
    fn ldexp(&self, k: i64) -> Self {
        self * (k as f64).exp2()
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Software floating-point real with a caller-chosen significand width.
///
/// Backed by `astro-float`; the stored precision is rounded up to the
/// underlying 64-bit word size, so the effective precision is at least
/// the requested number of bits and `2^(1-bits)` remains a valid bound
/// on the relative rounding error.
#[derive(Debug, Clone)]
pub struct Big(BigFloat);

impl Big {
    fn prec(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(64)
    }

    fn join(&self, rhs: &Big) -> usize {
        self.prec().max(rhs.prec())
    }
}

impl PartialEq for Big {
    fn eq(&self, rhs: &Self) -> bool {
        self.0.cmp(&rhs.0) == Some(0)
    }
}

impl PartialOrd for Big {
    fn partial_cmp(&self, rhs: &Self) -> Option<Ordering> {
        self.0.cmp(&rhs.0).map(|s| s.cmp(&0))
    }
}

impl fmt::Display for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for Big {
    const NATIVE_BITS: Option<u32> = None;

    fn bits(&self) -> u32 {
        self.prec() as u32
    }
    fn zero(bits: u32) -> Self {
        Big(BigFloat::new(bits as usize))
    }
    fn one(bits: u32) -> Self {
        Big(BigFloat::from_i8(1, bits as usize))
    }
    fn from_int(v: i64, bits: u32) -> Self {
        Big(BigFloat::from_i64(v, bits as usize))
    }
    fn exp2(k: i64, bits: u32) -> Self {
        let mut x = BigFloat::from_i8(1, bits as usize);
        // value = 0.5 * 2^e, so 2^k has stored exponent k + 1
        x.set_exponent((k + 1) as astro_float::Exponent);
        Big(x)
    }
    fn pi(bits: u32) -> Self {
        Big(with_consts(|cc| cc.pi(bits as usize, RM)))
    }

    fn parse_decimal(s: &str, bits: u32) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::ParseNumber {
                text: s.to_string(),
            });
        }
        let x = with_consts(|cc| BigFloat::parse(t, Radix::Dec, bits as usize, RM, cc));
        if x.is_nan() {
            return Err(Error::ParseNumber {
                text: s.to_string(),
            });
        }
        Ok(Big(x))
    }
    fn to_decimal(&self) -> String {
        format!("{}", self.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Big(self.0.add(&rhs.0, p, RM))
    }
    fn sub(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Big(self.0.sub(&rhs.0, p, RM))
    }
    fn mul(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Big(self.0.mul(&rhs.0, p, RM))
    }
    fn div(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Big(self.0.div(&rhs.0, p, RM))
    }
    fn neg(&self) -> Self {
        Big(self.0.neg())
    }
    fn abs(&self) -> Self {
        let mut x = self.0.clone();
        x.set_sign(astro_float::Sign::Pos);
        Big(x)
    }
    fn sqrt(&self) -> Self {
        Big(self.0.sqrt(self.prec(), RM))
    }
    fn cos(&self) -> Self {
        Big(with_consts(|cc| self.0.cos(self.prec(), RM, cc)))
    }
    fn sin(&self) -> Self {
        Big(with_consts(|cc| self.0.sin(self.prec(), RM, cc)))
    }
    fn asin(&self) -> Self {
        Big(with_consts(|cc| self.0.asin(self.prec(), RM, cc)))
    }
    fn hypot(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        let a = self.0.mul(&self.0, p, RM);
        let b = rhs.0.mul(&rhs.0, p, RM);
        Big(a.add(&b, p, RM).sqrt(p, RM))
    }
    fn powi(&self, n: u32) -> Self {
        Big(self.0.powi(n as usize, self.prec(), RM))
    }
    fn ldexp(&self, k: i64) -> Self {
        if self.0.is_zero() {
            return self.clone();
        }
        let mut x = self.0.clone();
        let e = x.exponent().expect("finite scalar");
        x.set_exponent(e + k as astro_float::Exponent);
        Big(x)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    fn to_f64(&self) -> f64 {
        // Format through a short decimal; values in this crate stay far
        // away from the f64 exponent limits.
        if self.0.is_zero() {
            return 0.0;
        }
        let e = self.0.exponent().unwrap_or(0) as f64;
        if e.abs() > 1020.0 {
            return if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        let mut x = self.0.clone();
        x.set_precision(64, RM).expect("precision reduction");
        let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite scalar");
        let m = words.last().copied().unwrap_or(0) as f64 / 2f64.powi(64);
        let v = m * 2f64.powi(exp);
        if sign == astro_float::Sign::Neg {
            -v
        } else {
            v
        }
    }
}

/// Complex value split into real and imaginary parts.
///
/// The eigensolver produces conjugate pairs from 2x2 Schur blocks; no
/// complex arithmetic beyond modulus and comparison is ever needed.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Complex<T> {
    pub fn real(re: T) -> Self {
        let im = T::zero(re.bits());
        Complex { re, im }
    }

    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    pub fn modulus(&self) -> T {
        self.re.hypot(&self.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_round_trip_f64() {
        for v in [0.1, -3.5e-200, 2.0f64.powi(-52), std::f64::consts::PI] {
            let s = v.to_decimal();
            assert_eq!(f64::parse_decimal(&s, 53).unwrap(), v);
        }
    }

    #[test]
    fn decimal_round_trip_big() {
        for bits in [64u32, 128, 256, 512] {
            let x = Big::pi(bits).sqrt();
            let s = x.to_decimal();
            let y = Big::parse_decimal(&s, bits).unwrap();
            assert!(x.sub(&y).is_zero(), "round trip at {bits} bits");
        }
    }

    #[test]
    fn exp2_is_exact() {
        let e = Big::exp2(-127, 128);
        assert_eq!(e.to_f64(), 2.0f64.powi(-127));
        let one = Big::exp2(0, 128);
        assert!(one.sub(&Big::one(128)).is_zero());
    }

    #[test]
    fn ldexp_scales_exactly() {
        let x = Big::from_int(3, 128);
        let y = x.ldexp(-2);
        assert_eq!(y.to_f64(), 0.75);
        assert!(Big::zero(128).ldexp(5).is_zero());
    }

    #[test]
    fn sqrt_two_squares_back() {
        let two = Big::from_int(2, 256);
        let r = two.sqrt();
        let err = r.mul(&r).sub(&two).abs();
        assert!(err < Big::exp2(-250, 256));
    }

    #[test]
    fn to_f64_is_close() {
        let x = Big::parse_decimal("-2.423215805461417", 256).unwrap();
        assert!((x.to_f64() + 2.423215805461417).abs() < 1e-15);
        let tiny = Big::exp2(-40, 128);
        assert_eq!(tiny.to_f64(), 2.0f64.powi(-40));
    }

    #[test]
    fn trig_identity() {
        let th = Big::parse_decimal("0.7", 192).unwrap();
        let s = th.sin();
        let c = th.cos();
        let one = s.mul(&s).add(&c.mul(&c));
        assert!(one.sub(&Big::one(192)).abs() < Big::exp2(-185, 192));
    }

    #[test]
    fn asin_half_is_pi_over_six() {
        let half = Big::parse_decimal("0.5", 128).unwrap();
        let six = Big::from_int(6, 128);
        let pi = half.asin().mul(&six);
        assert!(pi.sub(&Big::pi(128)).abs() < Big::exp2(-120, 128));
    }

    #[test]
    fn negative_zero_compares_equal() {
        let z = Big::zero(128);
        assert_eq!(z.neg().partial_cmp(&z), Some(Ordering::Equal));
        assert!(!z.neg().is_negative());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Big::parse_decimal("not-a-number", 128).is_err());
        assert!(f64::parse_decimal("", 53).is_err());
    }
}
