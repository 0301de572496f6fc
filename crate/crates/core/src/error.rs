use thiserror::Error;

/// Errors raised by the numerical kernels and everything built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the admissible domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method ran out of budget. `best` is the most accurate
    /// estimate seen, so callers can still report partial data.
    #[error("no convergence after {steps} steps (best estimate {best:e}, error estimate {error_estimate:e})")]
    NonConvergence {
        best: f64,
        error_estimate: f64,
        steps: usize,
    },

    /// The root-finding bracket does not enclose a sign change.
    #[error("root not bracketed on [{lo}, {hi}]: g(lo) = {g_lo:e}, g(hi) = {g_hi:e}")]
    Bracket { lo: f64, hi: f64, g_lo: f64, g_hi: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Accepts `value` if it lies in `[lo, hi]` up to a few ulps of slack and
/// returns it clamped into the interval.
pub(crate) fn check_closed(what: &str, value: f64, lo: f64, hi: f64, label: &str) -> Result<f64> {
    let slack = 8.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
    if !value.is_finite() || value < lo - slack || value > hi + slack {
        return Err(Error::domain(format!(
            "{what}: argument {value} outside {label} = [{lo}, {hi}]"
        )));
    }
    Ok(value.clamp(lo, hi))
}
