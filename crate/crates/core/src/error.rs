use thiserror::Error;

/// Library error type. `Domain` and `Tolerance` are caller mistakes;
/// `WorkLimit`, `QuadBudget` and `Overflow` mean the requested computation is
/// out of reach for this implementation, not that the inputs were malformed.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested tolerance is tighter than the documented floor.
    #[error("tolerance {requested:e} is below the floor {floor:e}")]
    Tolerance { requested: f64, floor: f64 },

    /// A series exceeded its term budget before meeting the tolerance.
    #[error("work budget of {budget} terms exhausted before reaching the tolerance")]
    WorkLimit { budget: u64 },

    /// Adaptive quadrature exceeded its subdivision budget.
    #[error("quadrature budget of {budget} subdivisions exhausted")]
    QuadBudget { budget: u32 },

    /// An integrand produced a non-finite sample.
    #[error("integrand returned a non-finite value at t = {at}")]
    NonFiniteSample { at: f64 },

    /// The result is too large for an f64.
    #[error("result overflows f64 at argument {x}")]
    Overflow { x: f64 },

    /// Independent evaluation routes disagree beyond the requested tolerance.
    #[error(
        "cross-check disagreement beyond {tol:e}: values {values:?}, spread {spread:e}"
    )]
    Disagreement {
        values: [f64; 3],
        spread: f64,
        tol: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Rejects non-finite or out-of-range tolerances. `floor` is the tightest
/// tolerance the caller's algorithm can honestly certify.
pub(crate) fn check_tol(tol: f64, floor: f64) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::domain("tolerance must be finite and positive"));
    }
    if tol < floor {
        return Err(Error::Tolerance {
            requested: tol,
            floor,
        });
    }
    Ok(())
}
