//! Safeguarded Newton / secant iteration for monotone functions.
//!
//! The bracket is shrunk on every evaluation and any step that leaves it, or
//! fails to halve the step before last, is replaced by bisection.

use super::quadrature::Interval;
use crate::error::{Error, Result};

/// Iteration cap for [`solve_monotone`] and [`solve_monotone_newton`].
pub const MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    /// `g(root)`; its magnitude never exceeds the requested tolerance.
    pub residual: f64,
    pub iterations: usize,
}

/// Finds `x` in `bracket` with `|g(x)| <= tol` for a strictly monotone `g`
/// whose endpoint values differ in sign. Steps are secant-accelerated.
pub fn solve_monotone<G>(g: G, bracket: Interval, tol: f64) -> Result<RootResult>
where
    G: FnMut(f64) -> Result<f64>,
{
    solve(g, None::<fn(f64) -> f64>, bracket, tol, None)
}

/// Like [`solve_monotone`], with Newton steps from the derivative `dg` and a
/// starting point `guess` (ignored unless strictly inside the bracket).
pub fn solve_monotone_newton<G, D>(
    g: G,
    dg: D,
    bracket: Interval,
    tol: f64,
    guess: f64,
) -> Result<RootResult>
where
    G: FnMut(f64) -> Result<f64>,
    D: FnMut(f64) -> f64,
{
    solve(g, Some(dg), bracket, tol, Some(guess))
}

fn solve<G, D>(
    mut g: G,
    mut dg: Option<D>,
    bracket: Interval,
    tol: f64,
    guess: Option<f64>,
) -> Result<RootResult>
where
    G: FnMut(f64) -> Result<f64>,
    D: FnMut(f64) -> f64,
{
    bracket.validate()?;
    if bracket.is_improper() {
        return Err(Error::domain("root bracket must be finite"));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("root tolerance must be positive, got {tol}")));
    }

    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let g_lo = g(lo)?;
    if g_lo.abs() <= tol {
        return Ok(RootResult { root: lo, residual: g_lo, iterations: 0 });
    }
    let g_hi = g(hi)?;
    if g_hi.abs() <= tol {
        return Ok(RootResult { root: hi, residual: g_hi, iterations: 0 });
    }
    if g_lo.is_nan() || g_hi.is_nan() || (g_lo > 0.0) == (g_hi > 0.0) {
        return Err(Error::Bracket { lo, hi, g_lo, g_hi });
    }
    let rising = g_hi > g_lo;

    let mut best = if g_lo.abs() < g_hi.abs() { (lo, g_lo) } else { (hi, g_hi) };
    let (mut x_prev, mut g_prev) = (lo, g_lo);
    let mut x = match guess {
        Some(x) if x > lo && x < hi => x,
        _ => {
            // regula falsi from the endpoints
            let x = lo - g_lo * (hi - lo) / (g_hi - g_lo);
            if x > lo && x < hi { x } else { 0.5 * (lo + hi) }
        }
    };
    let mut last_step = hi - lo;
    let mut step_before_last = hi - lo;

    for iteration in 1..=MAX_ITERATIONS {
        let gx = g(x)?;
        if !gx.is_finite() {
            return Err(Error::domain(format!("root function returned {gx} at x = {x}")));
        }
        if gx.abs() < best.1.abs() {
            best = (x, gx);
        }
        if gx.abs() <= tol {
            return Ok(RootResult { root: x, residual: gx, iterations: iteration });
        }
        if (gx > 0.0) == rising {
            hi = x;
        } else {
            lo = x;
        }

        let slope = match dg.as_mut() {
            Some(d) => d(x),
            None => (gx - g_prev) / (x - x_prev),
        };
        x_prev = x;
        g_prev = gx;

        let candidate = x - gx / slope;
        let accept = candidate.is_finite()
            && candidate > lo
            && candidate < hi
            && (candidate - x).abs() < 0.5 * step_before_last;
        let next = if accept { candidate } else { lo + 0.5 * (hi - lo) };
        if next <= lo || next >= hi {
            // bracket has shrunk to adjacent floats
            break;
        }
        step_before_last = last_step;
        last_step = (next - x).abs();
        x = next;
    }

    Err(Error::NonConvergence {
        best: best.0,
        error_estimate: best.1.abs(),
        steps: MAX_ITERATIONS,
    })
}
