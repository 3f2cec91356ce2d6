//! Two-sided envelope machinery for arcsl: the ratio F(x) =
//! arcsl(x)/(x Phi(x^4,3/2,1/4)), its endpoint constants alpha = 1/8 and
//! beta = arcsl(1)/zeta(3/2,1/4), lower/upper bound pairs (legacy factor 1/4
//! versus the sharp factor beta), the auxiliary function h, the series
//! coefficients a_k behind h's monotonicity, and grid sweeps that certify
//! the strict inequalities beyond propagated error bounds.

use serde::Serialize;

use crate::error::{check_tol, Error, Result};
use crate::eval::EvalResult;
use crate::lemniscate::{arcsl, arcsl_derivative, arcsl_one};
use crate::lerch::{hurwitz_zeta, lerch_phi, LerchParams, TERM_BUDGET};

/// Lower-bound factor; exact.
pub const ALPHA: f64 = 0.125;
/// Legacy upper-bound factor; exact.
pub const LEGACY_UPPER: f64 = 0.25;

/// Machine-rounding allowance folded into F's error bound. The composition
/// arcsl / (x * Phi) carries at most ~6 eps of relative rounding on top of
/// the truncation bounds; 16 eps keeps strict comparisons honest without
/// masking anything the sweeps are meant to catch.
const F_ROUNDING_REL: f64 = 16.0 * f64::EPSILON;
/// Rounding allowance for the margin comparisons in `verify_bounds`, scaled
/// by the magnitudes entering each subtraction.
const MARGIN_ROUNDING_REL: f64 = 8.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Legacy,
    Sharp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    Uniform,
    EndpointRefined,
}

/// Steepness of the endpoint clustering map.
const CLUSTER_STRENGTH: f64 = 6.0;

/// Monotone warp of [0,1] onto itself with geometric clustering toward both
/// ends; endpoints map exactly.
fn tanh_warp(t: f64) -> f64 {
    let c = CLUSTER_STRENGTH;
    0.5 * (1.0 + (c * (2.0 * t - 1.0)).tanh() / c.tanh())
}

/// An evaluation grid strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    count: u32,
    spacing: Spacing,
}

impl GridSpec {
    /// Requires 0 < x_min < x_max < 1 and count >= 2.
    pub fn new(x_min: f64, x_max: f64, count: u32, spacing: Spacing) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || x_min <= 0.0 || x_max >= 1.0 {
            return Err(Error::domain(format!(
                "grid endpoints must satisfy 0 < x_min < x_max < 1, got [{x_min}, {x_max}]"
            )));
        }
        if x_min >= x_max {
            return Err(Error::domain(format!(
                "grid endpoints must satisfy x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if count < 2 {
            return Err(Error::domain(format!(
                "grid needs at least 2 points, got {count}"
            )));
        }
        Ok(GridSpec {
            x_min,
            x_max,
            count,
            spacing,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    /// Ascending evaluation points; the first and last are exactly x_min and
    /// x_min + (x_max - x_min).
    pub fn points(&self) -> Vec<f64> {
        let n = self.count as usize;
        let span = self.x_max - self.x_min;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                let w = match self.spacing {
                    Spacing::Uniform => t,
                    Spacing::EndpointRefined => tanh_warp(t),
                };
                self.x_min + span * w
            })
            .collect()
    }
}

/// The named constants of the sharp inequality, each with an error bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConstantsBundle {
    pub alpha: EvalResult,
    pub beta: EvalResult,
    pub arcsl_one: EvalResult,
    pub zeta_3half_quarter: EvalResult,
    pub gamma_quarter: EvalResult,
    pub beta_quarter_half: EvalResult,
}

impl ConstantsBundle {
    pub fn compute(tol: f64) -> Result<Self> {
        Ok(ConstantsBundle {
            alpha: EvalResult::exact(ALPHA),
            beta: beta_constant(tol.max(1e-12))?,
            arcsl_one: arcsl_one()?,
            zeta_3half_quarter: hurwitz_zeta(1.5, 0.25, 1e-13)?,
            gamma_quarter: crate::special::gamma(0.25)?,
            beta_quarter_half: crate::special::beta(0.25, 0.5)?,
        })
    }
}

/// beta = arcsl(1)/zeta(3/2, 1/4), the sharp upper factor. Internal
/// tolerances are fixed well below the documented floor of 1e-12, so the
/// propagated bound (~4e-14) satisfies every admissible tol.
pub fn beta_constant(tol: f64) -> Result<EvalResult> {
    check_tol(tol, 1e-12)?;
    let zeta = hurwitz_zeta(1.5, 0.25, 1e-13)?;
    let one = arcsl_one()?;
    let value = one.value / zeta.value;
    let bound = (one.error_bound + value.abs() * zeta.error_bound) / zeta.value
        + f64::EPSILON * value.abs();
    Ok(EvalResult::new(value, bound, one.work + zeta.work))
}

fn check_open_unit(x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 || x >= 1.0 {
        return Err(Error::domain(format!(
            "x must lie in the open interval (0, 1), got {x}; the endpoint values are the constants 1/8 and beta"
        )));
    }
    Ok(())
}

fn phi_of_x(x: f64, tol: f64) -> Result<EvalResult> {
    let p = LerchParams::new(x * x * x * x, 1.5, 0.25).expect("x in (0,1) gives valid params");
    lerch_phi(p, tol)
}

/// F(x) = arcsl(x) / (x Phi(x^4, 3/2, 1/4)) on (0, 1); error bound by the
/// first-order quotient rule plus a machine-rounding term.
pub fn ratio_f(x: f64, tol: f64) -> Result<EvalResult> {
    check_open_unit(x)?;
    let u = arcsl(x, tol)?;
    let phi = phi_of_x(x, tol)?;
    let v = x * phi.value;
    let v_bound = x * phi.error_bound;
    let value = u.value / v;
    let bound =
        (u.error_bound + value.abs() * v_bound) / v + F_ROUNDING_REL * value.abs();
    Ok(EvalResult::new(value, bound, u.work + phi.work))
}

/// Lower and upper envelope at x: ((1/8) x Phi, kappa x Phi) with kappa = 1/4
/// in legacy mode or beta in sharp mode.
pub fn bound_pair(x: f64, mode: Mode, tol: f64) -> Result<(f64, f64)> {
    check_open_unit(x)?;
    let phi = phi_of_x(x, tol)?;
    let v = x * phi.value;
    let kappa = match mode {
        Mode::Legacy => LEGACY_UPPER,
        Mode::Sharp => beta_constant(tol.max(1e-12))?.value,
    };
    Ok((ALPHA * v, kappa * v))
}

/// h(s) = sqrt(1-s) sum_k s^k/sqrt(4k+1) on [0, 1); the inner series stops
/// once its geometric tail is below tol/sqrt(1-s), so the reported bound on
/// h itself is <= tol.
pub fn h_func(s: f64, tol: f64) -> Result<EvalResult> {
    if !s.is_finite() || !(0.0..1.0).contains(&s) {
        return Err(Error::domain(format!(
            "s must lie in [0, 1) (h has a zero of order 1/2 at s = 1), got {s}"
        )));
    }
    check_tol(tol, 1e-14)?;
    let prefactor = (1.0 - s).sqrt();
    let target = tol / prefactor;
    let mut sum = 0.0;
    let mut spow = 1.0f64;
    let mut n: u64 = 0;
    loop {
        sum += spow / ((4 * n + 1) as f64).sqrt();
        spow *= s;
        n += 1;
        let tail = spow / (((4 * n + 1) as f64).sqrt() * (1.0 - s));
        if tail <= target {
            return Ok(EvalResult::new(prefactor * sum, prefactor * tail, n));
        }
        if n >= TERM_BUDGET {
            return Err(Error::WorkLimit {
                budget: TERM_BUDGET,
            });
        }
    }
}

/// u'(x)/v'(x) via the closed form 1/(8 h(x^4)).
pub fn ratio_uprime_vprime(x: f64, tol: f64) -> Result<EvalResult> {
    check_open_unit(x)?;
    let h = h_func(x * x * x * x, tol)?;
    let value = 1.0 / (8.0 * h.value);
    let bound = h.error_bound / (8.0 * h.value * h.value) + 2.0 * f64::EPSILON * value;
    Ok(EvalResult::new(value, bound, h.work))
}

/// u'(x)/v'(x) by the direct quotient arcsl'(x) / (8 sum_k x^{4k}/sqrt(4k+1)).
/// The inner series is sized a priori and then summed in descending order, so
/// this route shares no accumulation path with `ratio_uprime_vprime`; the two
/// must agree within combined bounds.
pub fn ratio_uprime_vprime_direct(x: f64, tol: f64) -> Result<EvalResult> {
    check_open_unit(x)?;
    let up = arcsl_derivative(x)?;
    let s = x * x * x * x;
    let mut terms = Vec::new();
    let mut spow = 1.0f64;
    let mut n: u64 = 0;
    let tail = loop {
        terms.push(spow / ((4 * n + 1) as f64).sqrt());
        spow *= s;
        n += 1;
        let tail = spow / (((4 * n + 1) as f64).sqrt() * (1.0 - s));
        if tail <= tol {
            break tail;
        }
        if n >= TERM_BUDGET {
            return Err(Error::WorkLimit {
                budget: TERM_BUDGET,
            });
        }
    };
    let inner: f64 = terms.iter().rev().sum();
    let value = up / (8.0 * inner);
    let bound = up * tail / (8.0 * inner * inner) + 2.0 * f64::EPSILON * value;
    Ok(EvalResult::new(value, bound, n))
}

/// The series coefficients a_k = (2k+2)/sqrt(4k+5) - (2k+1)/sqrt(4k+1) in the
/// literal difference form and the cancellation-free rationalized form
/// -1/((2k+2)(4k+1)sqrt(4k+5) + (2k+1)(4k+5)sqrt(4k+1)). The rationalized
/// form is authoritative: the difference form loses all significant digits
/// by k ~ 1e4 while the rationalized denominator is a sum of positives.
pub fn coefficient_a(k: u64) -> (f64, f64) {
    let kf = k as f64;
    let even = 2.0 * kf + 2.0;
    let odd = 2.0 * kf + 1.0;
    let low = 4.0 * kf + 1.0;
    let high = 4.0 * kf + 5.0;
    let raw = even / high.sqrt() - odd / low.sqrt();
    let rationalized = -1.0 / (even * low * high.sqrt() + odd * high * low.sqrt());
    (raw, rationalized)
}

/// Per-point outcome of a bound check.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundCheckRecord {
    pub x: f64,
    pub lower: f64,
    /// arcsl(x).
    pub value: f64,
    pub upper: f64,
    /// F(x).
    pub ratio: f64,
    pub lower_margin: f64,
    pub upper_margin: f64,
}

/// Aggregate outcome of a grid sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub grid: GridSpec,
    pub passed: bool,
    pub violations: Vec<BoundCheckRecord>,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub monotone: bool,
    pub max_adjacent_decrease: f64,
}

/// Strict-monotone-increase comparator over (value, error_bound) pairs in
/// grid order: a pair passes when value rises by more than the combined
/// bounds allow it to have fallen. Returns (monotone, max adjacent decrease).
fn monotone_scan(seq: &[(f64, f64)]) -> (bool, f64) {
    let mut monotone = true;
    let mut max_decrease = f64::NEG_INFINITY;
    for w in seq.windows(2) {
        let (f0, e0) = w[0];
        let (f1, e1) = w[1];
        max_decrease = max_decrease.max(f0 - f1);
        if !(f1 - f0 > -(e0 + e1)) {
            monotone = false;
        }
    }
    if seq.len() < 2 {
        return (true, 0.0);
    }
    (monotone, max_decrease)
}

struct PointOutcome {
    record: BoundCheckRecord,
    ratio_bound: f64,
    ok: bool,
}

/// Evaluates one grid point against the envelope with upper factor `kappa`.
/// The pass test is strict beyond the propagated truncation bounds plus a
/// machine-rounding allowance on each margin.
fn check_point(x: f64, kappa: f64, kappa_bound: f64, tol: f64) -> Result<PointOutcome> {
    let u = arcsl(x, tol)?;
    let phi = phi_of_x(x, tol)?;
    let v = x * phi.value;
    let v_bound = x * phi.error_bound;
    let lower = ALPHA * v;
    let lower_bound = ALPHA * v_bound;
    let upper = kappa * v;
    let upper_bound = kappa * v_bound + kappa_bound * (v + v_bound);
    let ratio = u.value / v;
    let ratio_bound =
        (u.error_bound + ratio.abs() * v_bound) / v + F_ROUNDING_REL * ratio.abs();
    let lower_margin = u.value - lower;
    let upper_margin = upper - u.value;
    let ok_lower = lower_margin
        > u.error_bound + lower_bound + MARGIN_ROUNDING_REL * (u.value.abs() + lower.abs());
    let ok_upper = upper_margin
        > u.error_bound + upper_bound + MARGIN_ROUNDING_REL * (u.value.abs() + upper.abs());
    Ok(PointOutcome {
        record: BoundCheckRecord {
            x,
            lower,
            value: u.value,
            upper,
            ratio,
            lower_margin,
            upper_margin,
        },
        ratio_bound,
        ok: ok_lower && ok_upper,
    })
}

fn nan_record(x: f64) -> BoundCheckRecord {
    BoundCheckRecord {
        x,
        lower: f64::NAN,
        value: f64::NAN,
        upper: f64::NAN,
        ratio: f64::NAN,
        lower_margin: f64::NAN,
        upper_margin: f64::NAN,
    }
}

fn sweep(grid: &GridSpec, kappa: f64, kappa_bound: f64, tol: f64) -> SweepDetail {
    let mut records = Vec::with_capacity(grid.count() as usize);
    let mut violations = Vec::new();
    let mut ratios = Vec::new();
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    for x in grid.points() {
        // A point that cannot be evaluated (work budget, quadrature budget)
        // counts as a violation rather than aborting the sweep.
        match check_point(x, kappa, kappa_bound, tol) {
            Ok(outcome) => {
                min_ratio = min_ratio.min(outcome.record.ratio);
                max_ratio = max_ratio.max(outcome.record.ratio);
                ratios.push((outcome.record.ratio, outcome.ratio_bound));
                records.push(outcome.record);
                if !outcome.ok {
                    violations.push(outcome.record);
                }
            }
            Err(_) => {
                records.push(nan_record(x));
                violations.push(nan_record(x));
            }
        }
    }
    let (monotone, max_adjacent_decrease) = monotone_scan(&ratios);
    SweepDetail {
        report: VerificationReport {
            grid: *grid,
            passed: violations.is_empty(),
            violations,
            min_ratio,
            max_ratio,
            monotone,
            max_adjacent_decrease,
        },
        records,
    }
}

/// A sweep's summary report together with the per-point records it was
/// judged on (one per grid point, in ascending x).
#[derive(Debug, Clone)]
pub struct SweepDetail {
    pub report: VerificationReport,
    pub records: Vec<BoundCheckRecord>,
}

fn upper_rule(mode: Mode, tol: f64) -> Result<(f64, f64)> {
    match mode {
        Mode::Legacy => Ok((LEGACY_UPPER, 0.0)),
        Mode::Sharp => {
            let beta = beta_constant(tol.max(1e-12))?;
            Ok((beta.value, beta.error_bound))
        }
    }
}

/// Checks lower < arcsl(x) < upper at every grid point, strictly beyond
/// propagated error bounds, with the mode's upper factor.
pub fn verify_bounds(grid: &GridSpec, mode: Mode, tol: f64) -> Result<VerificationReport> {
    Ok(verify_bounds_detailed(grid, mode, tol)?.report)
}

/// `verify_bounds` plus every per-point record, for tabular output.
pub fn verify_bounds_detailed(grid: &GridSpec, mode: Mode, tol: f64) -> Result<SweepDetail> {
    let (kappa, kappa_bound) = upper_rule(mode, tol)?;
    Ok(sweep(grid, kappa, kappa_bound, tol))
}

/// Same sweep with an arbitrary exact upper factor. This is the sharpness
/// witness hook: any factor below beta must fail on a grid refined toward 1.
pub fn verify_bounds_with_upper_factor(
    grid: &GridSpec,
    upper_factor: f64,
    tol: f64,
) -> Result<VerificationReport> {
    Ok(verify_bounds_with_upper_factor_detailed(grid, upper_factor, tol)?.report)
}

/// `verify_bounds_with_upper_factor` plus every per-point record.
pub fn verify_bounds_with_upper_factor_detailed(
    grid: &GridSpec,
    upper_factor: f64,
    tol: f64,
) -> Result<SweepDetail> {
    if !upper_factor.is_finite() || upper_factor <= 0.0 {
        return Err(Error::domain(format!(
            "upper factor must be finite and positive, got {upper_factor}"
        )));
    }
    Ok(sweep(grid, upper_factor, 0.0, tol))
}

/// Checks that F is strictly increasing along the grid (at least 3 points),
/// beyond combined error bounds per adjacent pair.
pub fn verify_monotonicity(grid: &GridSpec, tol: f64) -> Result<VerificationReport> {
    if grid.count() < 3 {
        return Err(Error::domain(format!(
            "monotonicity check needs at least 3 grid points, got {}",
            grid.count()
        )));
    }
    let mut evaluated: Vec<(f64, f64, f64)> = Vec::new(); // (x, F, bound)
    let mut violations = Vec::new();
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    for x in grid.points() {
        match ratio_f(x, tol) {
            Ok(r) => {
                min_ratio = min_ratio.min(r.value);
                max_ratio = max_ratio.max(r.value);
                evaluated.push((x, r.value, r.error_bound));
            }
            Err(_) => violations.push(nan_record(x)),
        }
    }
    let pairs: Vec<(f64, f64)> = evaluated.iter().map(|&(_, f, e)| (f, e)).collect();
    let (monotone, max_adjacent_decrease) = monotone_scan(&pairs);
    // Record each adjacent pair that fails the comparator; the record is
    // bounds-shaped, so: lower carries the previous F the point had to beat,
    // value/ratio the offending F, margin the (negative) increment.
    for w in evaluated.windows(2) {
        let (_, f0, e0) = w[0];
        let (x1, f1, e1) = w[1];
        if !(f1 - f0 > -(e0 + e1)) {
            violations.push(BoundCheckRecord {
                x: x1,
                lower: f0,
                value: f1,
                upper: f0,
                ratio: f1,
                lower_margin: f1 - f0,
                upper_margin: 0.0,
            });
        }
    }
    Ok(VerificationReport {
        grid: *grid,
        passed: violations.is_empty(),
        violations,
        min_ratio,
        max_ratio,
        monotone,
        max_adjacent_decrease,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BETA: f64 = 0.12836793015152748;

    #[test]
    fn beta_constant_value_and_window() {
        let b = beta_constant(1e-12).unwrap();
        assert!((b.value - BETA).abs() <= 1e-13);
        assert!(b.error_bound <= 1e-12);
        assert!(b.value > 0.125 && b.value < 1.0 / 7.0);
        // First five decimals as printed: 0.12836...
        assert!(b.value >= 0.12836 && b.value < 0.12837);
        assert!(matches!(
            beta_constant(1e-13),
            Err(Error::Tolerance { .. })
        ));
    }

    #[test]
    fn constants_bundle_identities() {
        let c = ConstantsBundle::compute(1e-10).unwrap();
        assert_eq!(c.alpha.value, 0.125);
        assert_eq!(c.alpha.error_bound, 0.0);
        let zeta = c.zeta_3half_quarter.value;
        let combined = |a: EvalResult, b: EvalResult| a.error_bound + b.error_bound + 1e-13;
        assert!(
            (c.beta.value - c.arcsl_one.value / zeta).abs()
                <= combined(c.beta, c.arcsl_one) / zeta
        );
        assert!(
            (c.beta.value - c.beta_quarter_half.value / (4.0 * zeta)).abs()
                <= combined(c.beta, c.beta_quarter_half)
        );
        let tau = (2.0 * std::f64::consts::PI).sqrt();
        let via_gamma = c.gamma_quarter.value * c.gamma_quarter.value / (4.0 * tau * zeta);
        assert!((c.beta.value - via_gamma).abs() <= 1e-12);
    }

    #[test]
    fn ratio_f_reference_values() {
        let cases = [
            (0.2, 0.12500211263651092),
            (0.5, 0.12508434132331292),
            (0.8, 0.12564127361902009),
            (0.9, 0.12619240535628945),
            (0.99, 0.12754809419438291),
            (0.999, 0.12809557322030056),
        ];
        for (x, expected) in cases {
            let r = ratio_f(x, 1e-12).unwrap();
            assert!(
                (r.value - expected).abs() <= r.error_bound + 1e-13,
                "F({x}) = {} vs {expected}",
                r.value
            );
        }
    }

    #[test]
    fn ratio_f_endpoint_approach() {
        // Left limit 1/8: at 1e-4 the true gap (1.3e-19) is below double
        // resolution, so F evaluates to 0.125 up to one ulp.
        let left = ratio_f(1e-4, 1e-12).unwrap();
        assert!((left.value - 0.125).abs() <= 1e-3);
        assert!(left.value - 0.125 >= -2.0 * f64::EPSILON);
        // Where the gap is resolvable it must be strictly positive beyond
        // the propagated bound.
        let mid = ratio_f(0.05, 1e-13).unwrap();
        assert!(mid.value - 0.125 > mid.error_bound);
        // Right limit beta, one-sided.
        let right = ratio_f(1.0 - 1e-4, 1e-12).unwrap();
        let gap = BETA - right.value;
        assert!(gap > 0.0 && gap < 1e-2, "gap = {gap}");
        assert!(matches!(ratio_f(0.0, 1e-10), Err(Error::Domain(_))));
        assert!(matches!(ratio_f(1.0, 1e-10), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_pair_brackets_arcsl() {
        let (lo, hi) = bound_pair(0.5, Mode::Sharp, 1e-12).unwrap();
        let mid = arcsl(0.5, 1e-12).unwrap().value;
        assert!((lo - 0.5028701413119484).abs() <= 1e-12);
        assert!((hi - 0.5164191934017676).abs() <= 1e-11);
        assert!(lo < mid && mid < hi);
        let (_, legacy_hi) = bound_pair(0.5, Mode::Legacy, 1e-12).unwrap();
        assert!((legacy_hi - 0.25 * 0.5 * 8.045922260991175).abs() <= 1e-12);
        assert!(hi < legacy_hi);
        // The factor ratio is x-independent: 4 beta.
        for x in [0.1, 0.37, 0.92] {
            let (_, s) = bound_pair(x, Mode::Sharp, 1e-12).unwrap();
            let (_, l) = bound_pair(x, Mode::Legacy, 1e-12).unwrap();
            assert!((s / l - 4.0 * BETA).abs() <= 1e-14);
        }
    }

    #[test]
    fn h_reference_values_and_decrease() {
        let cases = [
            (0.0, 1.0),
            (0.0625, 0.9966392264998178),
            (0.25, 0.9857053313502942),
            (0.5, 0.968351714093831),
            (0.75, 0.945080073776165),
        ];
        for (s, expected) in cases {
            let h = h_func(s, 1e-13).unwrap();
            assert!(
                (h.value - expected).abs() <= h.error_bound + 1e-14,
                "h({s}) = {} vs {expected}",
                h.value
            );
        }
        let h25 = h_func(0.25, 1e-13).unwrap().value;
        let h50 = h_func(0.5, 1e-13).unwrap().value;
        let h75 = h_func(0.75, 1e-13).unwrap().value;
        assert!(h25 > h50 && h50 > h75);
        assert!(matches!(h_func(1.0, 1e-10), Err(Error::Domain(_))));
    }

    #[test]
    fn uprime_vprime_two_paths() {
        let closed = ratio_uprime_vprime(0.5, 1e-12).unwrap();
        assert!((closed.value - 0.1254215132982455).abs() <= 1e-13);
        let direct = ratio_uprime_vprime_direct(0.5, 1e-12).unwrap();
        assert!(
            (closed.value - direct.value).abs()
                <= closed.error_bound + direct.error_bound + 1e-13
        );
        // Strictly increasing on a quick grid; the acceptance suite covers
        // the 100-point version.
        let mut prev = 0.0;
        for i in 1..20 {
            let x = i as f64 / 20.0;
            let r = ratio_uprime_vprime(x, 1e-12).unwrap().value;
            assert!(r > prev, "u'/v' not increasing at {x}");
            prev = r;
        }
        // Left limit.
        let near_zero = ratio_uprime_vprime(1e-6, 1e-13).unwrap();
        assert!((near_zero.value - 0.125).abs() <= 1e-12);
    }

    #[test]
    fn coefficient_a_forms() {
        let (raw0, rat0) = coefficient_a(0);
        assert!((raw0 - (2.0 / 5.0f64.sqrt() - 1.0)).abs() <= 1e-16);
        assert!((raw0 - -0.10557280900008412).abs() <= 1e-15);
        assert!((rat0 - raw0).abs() <= 1e-15);
        let (raw1, _) = coefficient_a(1);
        assert!((raw1 - -0.008307453166540484).abs() <= 1e-15);
        // Rationalized is authoritative; raw agrees while cancellation is
        // mild and in absolute terms through k = 1000.
        for k in 0..=20u64 {
            let (raw, rat) = coefficient_a(k);
            assert!((raw - rat).abs() <= 1e-9 * rat.abs(), "k = {k}");
        }
        for k in [100u64, 500, 1000] {
            let (raw, rat) = coefficient_a(k);
            assert!((raw - rat).abs() <= 1e-13, "k = {k}");
            assert!(raw < 0.0);
        }
    }

    #[test]
    fn grid_spec_validation_and_points() {
        assert!(GridSpec::new(0.0, 0.5, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.1, 1.0, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.5, 0.5, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.6, 0.5, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.1, 0.9, 1, Spacing::Uniform).is_err());
        let g = GridSpec::new(0.2, 0.8, 4, Spacing::Uniform).unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0], 0.2);
        assert!((pts[1] - 0.4).abs() <= 1e-15);
        assert!((pts.last().unwrap() - 0.8).abs() <= 1e-15);
        let g = GridSpec::new(0.001, 0.999, 101, Spacing::EndpointRefined).unwrap();
        let pts = g.points();
        assert_eq!(pts[0], 0.001);
        assert!((pts.last().unwrap() - 0.999).abs() <= 1e-15);
        for w in pts.windows(2) {
            assert!(w[1] > w[0]);
        }
        // Clustering: the first interior step is much smaller than uniform.
        assert!(pts[1] - pts[0] < 0.1 * (0.998 / 100.0));
    }

    #[test]
    fn small_sweeps_pass() {
        let g = GridSpec::new(0.25, 0.75, 3, Spacing::Uniform).unwrap();
        let r = verify_bounds(&g, Mode::Sharp, 1e-10).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
        let r = verify_bounds(&g, Mode::Legacy, 1e-10).unwrap();
        assert!(r.passed);
        // Endpoint stress at minimal count.
        let g = GridSpec::new(0.001, 0.999, 2, Spacing::EndpointRefined).unwrap();
        let r = verify_bounds(&g, Mode::Sharp, 1e-10).unwrap();
        assert!(r.passed, "violations: {:?}", r.violations);
    }

    #[test]
    fn monotonicity_small_grids() {
        let g = GridSpec::new(0.2, 0.8, 3, Spacing::Uniform).unwrap();
        let r = verify_monotonicity(&g, 1e-10).unwrap();
        assert!(r.passed && r.monotone);
        assert!(r.max_adjacent_decrease < 0.0);
        let g2 = GridSpec::new(0.2, 0.8, 2, Spacing::Uniform).unwrap();
        assert!(verify_monotonicity(&g2, 1e-10).is_err());
    }

    #[test]
    fn thousand_point_uniform_monotonicity() {
        let g = GridSpec::new(0.001, 0.999, 1000, Spacing::Uniform).unwrap();
        let r = verify_monotonicity(&g, 1e-10).unwrap();
        assert!(r.monotone && r.passed);
        assert!((r.min_ratio - 0.125).abs() <= 1e-6);
        let gap = BETA - r.max_ratio;
        assert!(gap > 0.0 && gap < 1e-3, "gap = {gap}");
    }

    #[test]
    fn comparator_self_test_on_constant_sequence() {
        // The legacy/sharp envelopes share the factor x Phi, so their ratio
        // is exactly 2 at every point; the comparator must call a constant
        // sequence monotone with zero max decrease.
        let g = GridSpec::new(0.1, 0.9, 9, Spacing::Uniform).unwrap();
        let mut seq = Vec::new();
        for x in g.points() {
            let (lo, hi) = bound_pair(x, Mode::Legacy, 1e-10).unwrap();
            let ratio = hi / lo;
            assert_eq!(ratio, 2.0);
            seq.push((ratio, 1e-15));
        }
        let (monotone, max_dec) = monotone_scan(&seq);
        assert!(monotone);
        assert_eq!(max_dec, 0.0);
    }

    #[test]
    fn witness_factor_fails_near_one() {
        // beta - 1e-4 is crossed by F only past x ~ 0.99987, so the witness
        // grid must reach beyond the standard sweep's 1 - 1e-3.
        let g = GridSpec::new(0.9, 0.99999, 64, Spacing::EndpointRefined).unwrap();
        let r = verify_bounds_with_upper_factor(&g, BETA - 1e-4, 1e-12).unwrap();
        assert!(!r.passed);
        assert!(r.violations.iter().all(|v| v.x > 0.9));
        assert!(r.violations.iter().any(|v| v.upper_margin <= 0.0));
    }
}
