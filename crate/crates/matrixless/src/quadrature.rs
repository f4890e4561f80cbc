//! Cosine Fourier coefficients of an even function by composite
//! midpoint quadrature.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Computes `g_0 .. g_{K-1}` with `g_k = (1/2pi) integral of
/// g(theta) cos(k theta)` over `[-pi, pi]`, exploiting evenness to
/// integrate on `[0, pi]` only.
///
/// `quad_points` is the starting resolution (at least `8 K`); the rule
/// doubles until successive estimates of every coefficient agree to
/// `10^(-bits/4)` relative to the coefficient scale, or until the point
/// count has doubled six times. For even symbols that are smooth inside
/// the interval the midpoint rule converges extremely fast, so the cap
/// is rarely reached below a few hundred bits.
pub fn fourier_coefficients_by_quadrature<T: Scalar>(
    g_eval: impl Fn(&T) -> T,
    k_count: usize,
    quad_points: usize,
    bits: u32,
) -> Result<Vec<T>> {
    if k_count == 0 {
        return Ok(Vec::new());
    }
    if quad_points < 8 * k_count {
        return Err(Error::TooFewQuadPoints {
            points: quad_points,
            k: k_count,
        });
    }

    let tol = tolerance::<T>(bits);
    let mut m = quad_points;
    let mut prev = midpoint_pass(&g_eval, k_count, m, bits)?;
    for _ in 0..6 {
        m *= 2;
        let next = midpoint_pass(&g_eval, k_count, m, bits)?;
        let mut scale = T::one(bits);
        for c in &next {
            scale = scale.max_val(&c.abs());
        }
        let close = prev
            .iter()
            .zip(&next)
            .all(|(a, b)| a.sub(b).abs() <= tol.mul(&scale));
        prev = next;
        if close {
            break;
        }
    }
    Ok(prev)
}

/// `10^(-bits/4)` without decimal-string round trips.
fn tolerance<T: Scalar>(bits: u32) -> T {
    // 10^(-bits/4) = 2^(-bits/4 * log2 10); the exponent only needs to
    // be roughly right, so round it to an integer power of two.
    let log2_tol = -(bits as f64) / 4.0 * std::f64::consts::LOG2_10;
    T::exp2(log2_tol.round() as i64, bits)
}

fn midpoint_pass<T: Scalar>(
    g_eval: &impl Fn(&T) -> T,
    k_count: usize,
    m: usize,
    bits: u32,
) -> Result<Vec<T>> {
    let pi = T::pi(bits);
    let h = pi.div(&T::from_int(m as i64, bits));
    let half = T::exp2(-1, bits);
    let mut sums = vec![T::zero(bits); k_count];
    for i in 0..m {
        let theta = T::from_int(i as i64, bits).add(&half).mul(&h);
        let g = g_eval(&theta);
        if !g.is_finite() {
            return Err(Error::NonFiniteEvaluation {
                theta: theta.to_decimal(),
            });
        }
        // cos(k theta) by the Chebyshev recurrence
        let c1 = theta.cos();
        let mut ck_prev = T::one(bits); // cos(0)
        let mut ck = c1.clone(); // cos(theta)
        let two_c1 = c1.ldexp(1);
        for (k, sum) in sums.iter_mut().enumerate() {
            let value = match k {
                0 => g.clone(),
                1 => g.mul(&ck),
                _ => {
                    let next = two_c1.mul(&ck).sub(&ck_prev);
                    ck_prev = ck.clone();
                    ck = next;
                    g.mul(&ck)
                }
            };
            *sum = sum.add(&value);
        }
    }
    // (1/pi) * h * sum == sum / m
    let m_t = T::from_int(m as i64, bits);
    Ok(sums.into_iter().map(|s| s.div(&m_t)).collect())
}
