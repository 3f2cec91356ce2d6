//! The arc lemniscate sine arcsl(x) = int_0^x dt/sqrt(1-t^4) on [0, 1], its
//! derivative, the constant arcsl(1), and the lemniscate arc-length formula.
//!
//! Two evaluation regimes: a power series for x <= 0.9 (terms decay like
//! x^{4k} k^{-3/2}, so work is bounded there), and for larger x the
//! complement integral Q(x) = int_x^1 dt/sqrt(1-t^4) under t = 1 - u^2,
//! which removes the endpoint singularity: the integrand becomes
//! g(u) = 2/sqrt((2 - u^2)(1 + (1-u^2)^2)), analytic on [0, 1] with g(0) = 1.

use crate::error::{check_tol, Error, Result};
use crate::eval::EvalResult;
use crate::quad;
use crate::special::{self, central_binomial_ratios};

/// Series/quadrature switch point.
pub const X_SERIES: f64 = 0.9;
/// Tightest tolerance `arcsl` accepts.
pub const TOL_FLOOR: f64 = 1e-13;

/// Integrand of the complementary integral after the substitution
/// t = 1 - u^2, as a smooth function of u on [0, 1]: integrating it over
/// [sqrt(1-x), 1] gives arcsl(x), over [0, 1] gives arcsl(1). Exposed so
/// cross-checks can integrate past the singularity of 1/sqrt(1-t^4).
/// g(0) = 1, g(1) = 2.
#[inline]
pub fn complement_integrand(u: f64) -> f64 {
    let t = 1.0 - u * u;
    2.0 / ((2.0 - u * u) * (1.0 + t * t)).sqrt()
}

/// arcsl(x) for x in [0, 1] with error_bound <= tol (tol >= 1e-13).
pub fn arcsl(x: f64, tol: f64) -> Result<EvalResult> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x must lie in [0, 1], got {x}")));
    }
    check_tol(tol, TOL_FLOOR)?;
    if x <= X_SERIES {
        Ok(arcsl_series(x, tol))
    } else {
        arcsl_complement(x, tol)
    }
}

/// Odd extension: arcsl(-x) = -arcsl(x) on [-1, 1].
pub fn arcsl_signed(x: f64, tol: f64) -> Result<EvalResult> {
    if !x.is_finite() || !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x must lie in [-1, 1], got {x}")));
    }
    let r = arcsl(x.abs(), tol)?;
    Ok(EvalResult::new(
        if x < 0.0 { -r.value } else { r.value },
        r.error_bound,
        r.work,
    ))
}

/// Power series sum_k c_k x^{4k+1}/(4k+1) with c_k = C(2k,k)/4^k. Terms drop
/// by at least q = x^4 each step, so the tail after the last added term t is
/// below t q/(1-q). At least two terms are always taken: the bound then falls
/// from O(x^5) to O(x^9), which the endpoint verification margins require.
fn arcsl_series(x: f64, tol: f64) -> EvalResult {
    let q = x * x * x * x;
    let geometric = q / (1.0 - q);
    let mut xpow = x; // x^{4k+1}
    let mut sum = 0.0;
    let mut terms: u64 = 0;
    for (k, c) in central_binomial_ratios().enumerate() {
        let term = c * xpow / (4 * k + 1) as f64;
        sum += term;
        terms += 1;
        let bound = term * geometric;
        if terms >= 2 && bound <= tol {
            return EvalResult::new(sum, bound, terms);
        }
        xpow *= q;
    }
    unreachable!("series terminates for every q < 1")
}

/// Complement branch for x > X_SERIES: arcsl(1) - Q(x). The arcsl(1) part
/// comes from the Beta closed form when its inherited bound fits inside tol;
/// at tighter tolerances the whole thing is integrated as
/// int_{sqrt(1-x)}^1 g(u) du so the reported bound stays <= tol.
fn arcsl_complement(x: f64, tol: f64) -> Result<EvalResult> {
    let b = (1.0 - x).sqrt();
    let one = arcsl_one()?;
    if one.error_bound <= 0.5 * tol {
        let q = quad::integrate(complement_integrand, 0.0, b, tol - one.error_bound)?;
        Ok(EvalResult::new(
            one.value - q.value,
            one.error_bound + q.error,
            one.work + q.evals,
        ))
    } else {
        let whole = quad::integrate(complement_integrand, b, 1.0, tol)?;
        Ok(EvalResult::new(whole.value, whole.error, whole.evals))
    }
}

/// arcsl(1) = B(1/4, 1/2)/4, the lemniscate constant.
pub fn arcsl_one() -> Result<EvalResult> {
    let b = special::beta(0.25, 0.5)?;
    Ok(EvalResult::new(
        0.25 * b.value,
        0.25 * b.error_bound,
        b.work,
    ))
}

/// d/dx arcsl(x) = 1/sqrt(1 - x^4), finite only on [0, 1).
pub fn arcsl_derivative(x: f64) -> Result<f64> {
    if !x.is_finite() || !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!(
            "x must lie in [0, 1) (derivative has a pole at 1), got {x}"
        )));
    }
    Ok((1.0 - x * x * x * x).sqrt().recip())
}

/// Arc length of the lemniscate with half focal distance c: 4 sqrt(2) c arcsl(1).
pub fn lemniscate_arc_length(c: f64) -> Result<EvalResult> {
    if !c.is_finite() || c < 0.0 {
        return Err(Error::domain(format!("c must be >= 0, got {c}")));
    }
    let one = arcsl_one()?;
    let factor = 4.0 * std::f64::consts::SQRT_2 * c;
    let value = factor * one.value;
    Ok(EvalResult::new(
        value,
        factor * one.error_bound + f64::EPSILON * value.abs(),
        one.work,
    ))
}
