//! Independent cross-check routes. Everything here deliberately avoids the
//! main code paths: quadrature is adaptive Simpson with Richardson
//! extrapolation instead of Gauss-Kronrod, series are summed ascending with
//! plain accumulation instead of compensated descending sums, and powers go
//! through `powf` with no fast paths. Agreement within combined bounds is
//! evidence; shared bugs would need to live in two unrelated algorithms.

use serde::Serialize;

use crate::error::{check_tol, Error, Result};
use crate::lemniscate::complement_integrand;
use crate::lerch::hurwitz_zeta;
use crate::special;

/// Subdivision budget for the adaptive Simpson rule.
const SIMPSON_BUDGET: u32 = 100_000;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: u32,
}

struct SimpsonState {
    value: f64,
    error: f64,
    subdivisions: u32,
}

fn simpson_sample(f: &dyn Fn(f64) -> f64, t: f64) -> Result<f64> {
    let y = f(t);
    if !y.is_finite() {
        return Err(Error::NonFiniteSample { at: t });
    }
    Ok(y)
}

fn simpson_recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    state: &mut SimpsonState,
) -> Result<()> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = simpson_sample(f, lm)?;
    let frm = simpson_sample(f, rm)?;
    let h = b - a;
    let left = h / 12.0 * (fa + 4.0 * flm + fm);
    let right = h / 12.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    let delta = refined - whole;
    // Width floor: below it the panel contributes at most rounding noise.
    if delta.abs() <= 15.0 * tol || h <= 1e-14 * (a.abs() + b.abs() + 1.0) {
        state.value += refined + delta / 15.0;
        state.error += delta.abs() / 15.0;
        return Ok(());
    }
    state.subdivisions += 1;
    if state.subdivisions > SIMPSON_BUDGET {
        return Err(Error::QuadBudget {
            budget: SIMPSON_BUDGET,
        });
    }
    simpson_recurse(f, a, m, fa, flm, fm, left, tol / 2.0, state)?;
    simpson_recurse(f, m, b, fm, frm, fb, right, tol / 2.0, state)
}

/// Adaptive Simpson integration of f over [a, b] (a <= b) with Richardson
/// extrapolation per accepted panel. `error_estimate` is the accumulated
/// extrapolation residue, an estimate rather than a certified bound.
pub fn quad_adaptive(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "integration limits must be finite, got [{a}, {b}]"
        )));
    }
    if a > b {
        return Err(Error::domain(format!(
            "integration limits must satisfy a <= b, got [{a}, {b}]"
        )));
    }
    check_tol(tol, 1e-15)?;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }
    let fa = simpson_sample(&f, a)?;
    let fb = simpson_sample(&f, b)?;
    let m = 0.5 * (a + b);
    let fm = simpson_sample(&f, m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut state = SimpsonState {
        value: 0.0,
        error: 0.0,
        subdivisions: 0,
    };
    simpson_recurse(&f, a, b, fa, fm, fb, whole, tol, &mut state)?;
    Ok(QuadResult {
        value: state.value,
        error_estimate: state.error,
        subdivisions: state.subdivisions,
    })
}

/// Plain ascending partial sum of the Lerch series with `n_terms` terms,
/// plus a rigorous upper bound on the discarded tail. Returns
/// (partial_sum, tail_upper_bound); partial <= true value <= partial + tail
/// for nonnegative terms. n_terms is capped at 1e8.
pub fn lerch_bruteforce(z: f64, s: f64, a: f64, n_terms: u64) -> Result<(f64, f64)> {
    if !z.is_finite() || !(0.0..=1.0).contains(&z) {
        return Err(Error::domain(format!(
            "z must lie in [0, 1], got {z}"
        )));
    }
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("s must exceed 1, got {s}")));
    }
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::domain(format!("a must be positive, got {a}")));
    }
    const CAP: u64 = 100_000_000;
    if n_terms == 0 || n_terms > CAP {
        return Err(Error::WorkLimit { budget: CAP });
    }
    let mut partial = 0.0f64;
    for n in 0..n_terms {
        let nf = n as f64;
        partial += z.powf(nf) / (nf + a).powf(s);
        if z == 0.0 {
            // 0^0 = 1 gave the n = 0 term; everything after is zero.
            return Ok((partial, 0.0));
        }
    }
    let nf = n_terms as f64;
    let tail = if z == 1.0 {
        // Integral comparison: sum_{n >= N} (n+a)^-s <= (N-1+a)^(1-s)/(s-1).
        (nf - 1.0 + a).powf(1.0 - s) / (s - 1.0)
    } else {
        // Geometric comparison with the first omitted term.
        z.powf(nf) / ((nf + a).powf(s) * (1.0 - z))
    };
    Ok((partial, tail))
}

/// Three independent routes to the constant arcsl(1)/zeta(3/2, 1/4).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CrosscheckReport {
    /// Direct quadrature of the arc-length integrand over [0, 1].
    pub beta_via_arcsl: f64,
    /// B(1/4, 1/2)/4 over the same zeta.
    pub beta_via_beta_func: f64,
    /// Gamma(1/4)^2/(4 sqrt(2 pi)) over the same zeta.
    pub beta_via_gamma: f64,
    pub max_spread: f64,
}

/// Recomputes the sharp constant by three routes that share only the zeta
/// denominator and checks pairwise agreement within tol (tol >= 1e-11).
pub fn constants_crosscheck(tol: f64) -> Result<CrosscheckReport> {
    check_tol(tol, 1e-11)?;
    let zeta = hurwitz_zeta(1.5, 0.25, 1e-13)?.value;
    // Route 1: arcsl(1) as the substituted endpoint integral, by Simpson.
    let numerator = quad_adaptive(complement_integrand, 0.0, 1.0, 1e-12)?.value;
    let via_arcsl = numerator / zeta;
    // Route 2: arcsl(1) = B(1/4, 1/2)/4.
    let via_beta_func = special::beta(0.25, 0.5)?.value / (4.0 * zeta);
    // Route 3: B(1/4, 1/2) = Gamma(1/4)^2 / sqrt(2 pi), using the
    // reflection-free closed form at these half-integer offsets.
    let g = special::gamma(0.25)?.value;
    let via_gamma = g * g / (4.0 * (2.0 * std::f64::consts::PI).sqrt() * zeta);
    let spread = (via_arcsl - via_beta_func)
        .abs()
        .max((via_arcsl - via_gamma).abs())
        .max((via_beta_func - via_gamma).abs());
    if spread > tol {
        return Err(Error::Disagreement {
            values: [via_arcsl, via_beta_func, via_gamma],
            spread,
            tol,
        });
    }
    Ok(CrosscheckReport {
        beta_via_arcsl: via_arcsl,
        beta_via_beta_func: via_beta_func,
        beta_via_gamma: via_gamma,
        max_spread: spread,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_is_exact_on_cubics() {
        let q = quad_adaptive(|t| t * t * t - 2.0 * t + 1.0, -1.0, 2.0, 1e-10).unwrap();
        assert!((q.value - 3.75).abs() <= 1e-14);
        assert_eq!(q.subdivisions, 0);
    }

    #[test]
    fn simpson_smooth_and_oscillatory() {
        let q = quad_adaptive(|t| t.exp(), 0.0, 1.0, 1e-12).unwrap();
        assert!((q.value - (1.0f64.exp() - 1.0)).abs() <= 1e-12);
        // Antiderivative of sin(50 t) e^-t is -e^-t (sin(50 t) + 50 cos(50 t))/2501.
        let anti = |t: f64| -(-t).exp() * ((50.0 * t).sin() + 50.0 * (50.0 * t).cos()) / 2501.0;
        let q = quad_adaptive(|t| (50.0 * t).sin() * (-t).exp(), 0.0, 3.0, 1e-11).unwrap();
        assert!((q.value - (anti(3.0) - anti(0.0))).abs() <= 1e-9);
        assert!(q.subdivisions > 10);
    }

    #[test]
    fn simpson_halving_tol_never_worsens() {
        let exact = 1.0f64.exp() - 1.0;
        let mut prev = f64::INFINITY;
        for k in [1e-6, 1e-8, 1e-10, 1e-12] {
            let q = quad_adaptive(|t| t.exp(), 0.0, 1.0, k).unwrap();
            let err = (q.value - exact).abs();
            assert!(err <= prev * 1.001 + 1e-15);
            prev = err;
        }
    }

    #[test]
    fn simpson_rejects_bad_limits_and_samples() {
        assert!(matches!(
            quad_adaptive(|t| t, 1.0, 0.0, 1e-10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            quad_adaptive(|t| 1.0 / (t - 0.5), 0.0, 1.0, 1e-10),
            Err(Error::NonFiniteSample { .. })
        ));
        let q = quad_adaptive(|t| t, 0.3, 0.3, 1e-10).unwrap();
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn bruteforce_encloses_and_tightens() {
        // zeta(3/2, 1/4) through the z = 1 branch.
        let truth = 10.213055360466601;
        let (p6, t6) = lerch_bruteforce(1.0, 1.5, 0.25, 1_000_000).unwrap();
        assert!((p6 - 10.21106).abs() <= 1e-4);
        assert!(p6 < truth && truth <= p6 + t6);
        let (p4, t4) = lerch_bruteforce(1.0, 1.5, 0.25, 10_000).unwrap();
        assert!(p4 < truth && truth <= p4 + t4);
        assert!(t6 < t4);
        // Geometric branch.
        let phi = 8.045922260991175; // Phi(1/16, 3/2, 1/4)
        let (p, t) = lerch_bruteforce(0.0625, 1.5, 0.25, 64).unwrap();
        assert!(p <= phi && phi <= p + t);
        assert!(t <= 1e-16);
        // z = 0 terminates immediately with a zero tail.
        let (p, t) = lerch_bruteforce(0.0, 1.5, 0.25, 5).unwrap();
        assert_eq!(p, 0.25f64.powf(-1.5));
        assert_eq!(t, 0.0);
    }

    #[test]
    fn bruteforce_validates_arguments() {
        assert!(matches!(
            lerch_bruteforce(1.5, 2.0, 1.0, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            lerch_bruteforce(0.5, 1.0, 1.0, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            lerch_bruteforce(0.5, 2.0, 0.0, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            lerch_bruteforce(0.5, 2.0, 1.0, 0),
            Err(Error::WorkLimit { .. })
        ));
        assert!(matches!(
            lerch_bruteforce(0.5, 2.0, 1.0, 200_000_000),
            Err(Error::WorkLimit { .. })
        ));
    }

    #[test]
    fn crosscheck_routes_agree() {
        let r = constants_crosscheck(1e-11).unwrap();
        assert!(r.max_spread <= 1e-11);
        for v in [r.beta_via_arcsl, r.beta_via_beta_func, r.beta_via_gamma] {
            // All three truncate to the same five decimals.
            assert!((v * 1e5).floor() == 12836.0, "route value {v}");
        }
        assert!(matches!(
            constants_crosscheck(1e-12),
            Err(Error::Tolerance { .. })
        ));
    }
}
