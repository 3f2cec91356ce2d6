use serde::Serialize;

/// A computed value together with an a-posteriori truncation bound and the
/// amount of work spent. `error_bound` covers the truncation error of the
/// underlying series or quadrature; it does not fold in f64 rounding noise,
/// which is orders of magnitude below every tolerance this crate accepts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    /// Nonnegative, finite. The true value lies within `error_bound` of
    /// `value` up to floating-point rounding.
    pub error_bound: f64,
    /// Terms summed or quadrature evaluations performed.
    pub work: u64,
}

impl EvalResult {
    pub fn new(value: f64, error_bound: f64, work: u64) -> Self {
        debug_assert!(error_bound >= 0.0 && error_bound.is_finite());
        EvalResult {
            value,
            error_bound,
            work,
        }
    }

    /// Exact value: zero error bound.
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            error_bound: 0.0,
            work: 1,
        }
    }
}
