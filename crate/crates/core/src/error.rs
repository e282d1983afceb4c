use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical operations.
///
/// Each variant corresponds to a failure mode named by the operation that
/// raises it; the audit maps `ToleranceNotMet` and `NonConvergence` to
/// infrastructure skips and everything else to a failed check.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0} is within tolerance of a non-positive integer")]
    Pole(Complex64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature budget of {budget} evaluations exhausted (error estimate {estimate:e}, requested {tol:e})")]
    ToleranceNotMet { budget: usize, estimate: f64, tol: f64 },

    #[error("function vanishes on the contour near {0}")]
    BoundaryZero(Complex64),

    #[error("argument tracking did not converge: {0}")]
    NonConvergence(String),

    #[error("cell [{im_lo}, {im_hi}] still reports winding {winding} at minimum size")]
    MultiplicityAmbiguity { im_lo: f64, im_hi: f64, winding: i64 },

    #[error("zero count mismatch: strip rectangle counts {strip}, critical-line cells count {line}")]
    CountMismatch { strip: i64, line: i64 },

    #[error("{omega} lies within the pole tolerance of i*{beta}")]
    PoleProximity { omega: Complex64, beta: f64 },

    #[error("f vanishes on the Rouche boundary at {0}")]
    ZeroOnBoundary(Complex64),

    #[error("|f(0)| is below tolerance")]
    ZeroAtCenter,

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
