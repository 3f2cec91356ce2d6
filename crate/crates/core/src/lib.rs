//! Numerical evaluation of the arc lemniscate sine and the special functions
//! around it (Lerch transcendent, Hurwitz zeta, Gamma, Beta), each returning
//! a value together with an a-posteriori truncation bound, plus machinery for
//! certifying the two-sided envelope
//!
//!   (1/8) x Phi(x^4, 3/2, 1/4)  <  arcsl(x)  <  kappa x Phi(x^4, 3/2, 1/4)
//!
//! on (0, 1), where the classical factor kappa = 1/4 can be tightened to the
//! best possible kappa = arcsl(1)/zeta(3/2, 1/4) = 0.12836793...
//!
//! Every approximation reports how wrong it may be: `EvalResult` carries an
//! `error_bound` covering the truncation error of the algorithm (not f64
//! rounding), and the grid verifiers in `bounds` only declare an inequality
//! satisfied when the margin exceeds the propagated bounds plus an explicit
//! rounding allowance. The `oracle` module recomputes key quantities by
//! algorithms that share nothing with the main paths.

pub mod bounds;
pub mod error;
pub mod eval;
pub mod lemniscate;
pub mod lerch;
pub mod oracle;
pub mod special;

mod quad;

pub use error::{Error, Result};
pub use eval::EvalResult;
