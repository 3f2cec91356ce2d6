//! Adaptive Gauss-Kronrod 7/15 quadrature, crate-internal. The error estimate
//! per panel is |K15 - G7|; panels split until each meets its share of the
//! tolerance. The oracle module deliberately uses a different integrator.

use crate::error::{Error, Result};

/// Nonnegative Kronrod abscissae on [-1, 1], outermost first. Odd indices are
/// the embedded Gauss-7 nodes.
const XGK: [f64; 8] = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
];
const WGK: [f64; 8] = [
    0.0229353220105292,
    0.0630920926299786,
    0.1047900103222502,
    0.1406532597155259,
    0.1690047266392679,
    0.1903505780647854,
    0.2044329400752989,
    0.2094821410847278,
];
const WG: [f64; 4] = [
    0.1294849661688697,
    0.2797053914892767,
    0.3818300505051189,
    0.4179591836734694,
];

/// Panel split budget; the integrands this crate feeds in are smooth, so
/// hitting it means something is wrong with the caller.
const SPLIT_BUDGET: u32 = 10_000;

pub(crate) struct GkEstimate {
    pub value: f64,
    pub error: f64,
    pub evals: u64,
}

fn sample<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if !y.is_finite() {
        return Err(Error::NonFiniteSample { at: x });
    }
    Ok(y)
}

/// One K15/G7 panel: returns (integral, |K15 - G7|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let fc = sample(f, center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let lo = sample(f, center - dx)?;
        let hi = sample(f, center + dx)?;
        kronrod += WGK[i] * (lo + hi);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (lo + hi);
        }
    }
    Ok((kronrod * half, ((kronrod - gauss) * half).abs()))
}

/// Integrate f over [a, b] (a <= b) until the summed panel error estimate is
/// within tol. Deterministic: the panel worklist is processed in a fixed
/// order.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<GkEstimate> {
    if a == b {
        return Ok(GkEstimate {
            value: 0.0,
            error: 0.0,
            evals: 0,
        });
    }
    let mut stack = vec![(a, b, tol)];
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evals: u64 = 0;
    let mut splits: u32 = 0;
    while let Some((lo, hi, share)) = stack.pop() {
        let (v, e) = gk15(&f, lo, hi)?;
        evals += 15;
        let width_floor = 8.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
        if e <= share || hi - lo <= width_floor {
            value += v;
            error += e;
        } else {
            splits += 1;
            if splits > SPLIT_BUDGET {
                return Err(Error::QuadBudget {
                    budget: SPLIT_BUDGET,
                });
            }
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, 0.5 * share));
            stack.push((lo, mid, 0.5 * share));
        }
    }
    Ok(GkEstimate {
        value,
        error,
        evals,
    })
}
