//! Double-exponential quadrature with level doubling.
//!
//! Finite intervals use the tanh-sinh map `x = c + h tanh(π/2 sinh t)`;
//! intervals with an infinite upper limit use the exp-sinh map
//! `x = lo + exp(π/2 sinh t)`. Transformed nodes are strictly interior, so an
//! integrand is never evaluated at an endpoint. Node tables are built once per
//! level and shared by every call.
//!
//! Inverse-square-root endpoint singularities lose accuracy when the integrand
//! only sees `x`: the last representable abscissa below `b` sits an ulp away
//! from it, and `∫_{b-ulp}^{b} (b-x)^(-1/2) dx` is already ~2e-8 for `b = 1`.
//! [`integrate_abscissa`] hands the integrand the exact distances to both
//! endpoints so it can form `b - x` without cancellation.

use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest refinement level a [`ToleranceConfig`] may request.
pub const MAX_LEVELS: usize = 20;

/// Half-width of the truncated `t` range. At `t = 6` the tanh-sinh
/// complement `1 - tanh(π/2 sinh t)` is about 1e-275.
const T_MAX: f64 = 6.0;

/// Convergence is not declared before this level (step 1/8).
const MIN_LEVEL: usize = 3;

/// Integration range. `hi` may be `f64::INFINITY` for improper integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    /// `[lo, +∞)`.
    pub const fn to_infinity(lo: f64) -> Self {
        Interval {
            lo,
            hi: f64::INFINITY,
        }
    }

    pub fn is_improper(&self) -> bool {
        self.hi == f64::INFINITY
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !self.lo.is_finite() {
            return Err(Error::domain(format!(
                "interval lower endpoint must be finite, got {}",
                self.lo
            )));
        }
        if !(self.hi.is_finite() || self.is_improper()) {
            return Err(Error::domain(format!(
                "interval upper endpoint must be finite or +inf, got {}",
                self.hi
            )));
        }
        if self.lo > self.hi {
            return Err(Error::domain(format!(
                "interval endpoints out of order: [{}, {}]",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

/// Stopping rule for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_levels: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_levels: 12,
        }
    }
}

impl ToleranceConfig {
    /// Same relative tolerance and level budget as the default, with a
    /// different absolute tolerance.
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        ToleranceConfig {
            abs_tol,
            ..Self::default()
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if self.max_levels == 0 || self.max_levels > MAX_LEVELS {
            return Err(Error::domain(format!(
                "max_levels must lie in [1, {MAX_LEVELS}], got {}",
                self.max_levels
            )));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Difference of the last two refinement levels, floored at the
    /// rounding level of the weighted sum.
    pub error_estimate: f64,
    /// Number of integrand calls.
    pub evaluations: usize,
}

/// A quadrature node as seen by an endpoint-aware integrand.
///
/// `from_lo = x - lo` and `to_hi = hi - x` are computed directly from the
/// transformation and carry full relative precision even where `x` itself has
/// rounded onto an endpoint. `to_hi` is infinite on improper intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Integrates `f` over `range`.
///
/// Nodes whose abscissa rounds onto an endpoint are skipped. For integrands
/// with endpoint singularities prefer [`integrate_abscissa`].
pub fn integrate<F>(f: F, range: Interval, tol: &ToleranceConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let (lo, hi) = (range.lo, range.hi);
    run(range, tol, |a: Abscissa| {
        if a.x <= lo || a.x >= hi {
            None
        } else {
            Some(f(a.x))
        }
    })
}

/// Integrates an endpoint-aware integrand over `range`.
pub fn integrate_abscissa<F>(f: F, range: Interval, tol: &ToleranceConfig) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> f64,
{
    run(range, tol, |a: Abscissa| {
        if a.from_lo > 0.0 && a.to_hi > 0.0 {
            Some(f(a))
        } else {
            None
        }
    })
}

#[derive(Default)]
struct Accumulator {
    total: f64,
    /// Neumaier compensation for `total`.
    carry: f64,
    magnitude: f64,
    evaluations: usize,
}

impl Accumulator {
    fn add<F>(&mut self, f: &F, node: Abscissa, weight: f64) -> Result<()>
    where
        F: Fn(Abscissa) -> Option<f64>,
    {
        let Some(value) = f(node) else {
            return Ok(());
        };
        self.evaluations += 1;
        if !value.is_finite() {
            return Err(Error::domain(format!(
                "integrand returned {value} at interior abscissa x = {}",
                node.x
            )));
        }
        let term = weight * value;
        let sum = self.total + term;
        self.carry += if self.total.abs() >= term.abs() {
            (self.total - sum) + term
        } else {
            (term - sum) + self.total
        };
        self.total = sum;
        self.magnitude += term.abs();
        Ok(())
    }

    fn sum(&self) -> f64 {
        self.total + self.carry
    }
}

fn run<F>(range: Interval, tol: &ToleranceConfig, f: F) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> Option<f64>,
{
    range.validate()?;
    tol.validate()?;
    if range.lo == range.hi {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let mut acc = Accumulator::default();
    let mut previous: Option<f64> = None;
    let mut last_error = f64::INFINITY;
    let min_level = MIN_LEVEL.min(tol.max_levels);

    for level in 0..=tol.max_levels {
        if range.is_improper() {
            add_half_line_level(&mut acc, &f, range.lo, level)?;
        } else {
            add_finite_level(&mut acc, &f, range.lo, range.hi, level)?;
        }
        let h = 0.5_f64.powi(level as i32);
        let estimate = h * acc.sum();
        if let Some(prev) = previous {
            let error = (estimate - prev)
                .abs()
                .max(f64::EPSILON * h * acc.magnitude);
            if level >= min_level && error <= tol.target(estimate) {
                return Ok(QuadratureResult {
                    value: estimate,
                    error_estimate: error,
                    evaluations: acc.evaluations,
                });
            }
            last_error = error;
        }
        previous = Some(estimate);
    }

    Err(Error::NonConvergence {
        best: previous.unwrap_or(0.0),
        error_estimate: last_error,
        steps: tol.max_levels,
    })
}

fn add_finite_level<F>(acc: &mut Accumulator, f: &F, lo: f64, hi: f64, level: usize) -> Result<()>
where
    F: Fn(Abscissa) -> Option<f64>,
{
    let half = 0.5 * (hi - lo);
    if level == 0 {
        let centre = Abscissa {
            x: lo + half,
            from_lo: half,
            to_hi: half,
        };
        acc.add(f, centre, FRAC_PI_2 * half)?;
    }
    for node in finite_nodes(level) {
        let near = half * node.delta;
        let far = half * (2.0 - node.delta);
        let weight = half * node.weight;
        let upper = Abscissa {
            x: hi - near,
            from_lo: far,
            to_hi: near,
        };
        let lower = Abscissa {
            x: lo + near,
            from_lo: near,
            to_hi: far,
        };
        acc.add(f, upper, weight)?;
        acc.add(f, lower, weight)?;
    }
    Ok(())
}

fn add_half_line_level<F>(acc: &mut Accumulator, f: &F, lo: f64, level: usize) -> Result<()>
where
    F: Fn(Abscissa) -> Option<f64>,
{
    let at = |offset: f64| Abscissa {
        x: lo + offset,
        from_lo: offset,
        to_hi: f64::INFINITY,
    };
    if level == 0 {
        acc.add(f, at(1.0), FRAC_PI_2)?;
    }
    for node in half_line_nodes(level) {
        acc.add(f, at(node.outer_offset), node.outer_weight)?;
        acc.add(f, at(node.inner_offset), node.inner_weight)?;
    }
    Ok(())
}

/// Positive `t` values first used at `level`: the integers for level 0, odd
/// multiples of `2^-level` afterwards.
fn new_abscissae(level: usize) -> impl Iterator<Item = f64> {
    let h = 0.5_f64.powi(level as i32);
    let (first, stride) = if level == 0 { (1.0, 1.0) } else { (h, 2.0 * h) };
    (0..)
        .map(move |j| first + stride * j as f64)
        .take_while(|&t| t <= T_MAX)
}

/// Tanh-sinh node: `delta = 1 - tanh(u)` and the Jacobian
/// `(π/2) cosh t sech²u`, with `u = (π/2) sinh t`.
struct FiniteNode {
    delta: f64,
    weight: f64,
}

fn finite_nodes(level: usize) -> &'static [FiniteNode] {
    static TABLES: [OnceLock<Vec<FiniteNode>>; MAX_LEVELS + 1] =
        [const { OnceLock::new() }; MAX_LEVELS + 1];
    TABLES[level].get_or_init(|| {
        new_abscissae(level)
            .map(|t| {
                let u = FRAC_PI_2 * t.sinh();
                let delta = 2.0 / (1.0 + (2.0 * u).exp());
                // sech²u = (1 - tanh u)(1 + tanh u)
                let weight = FRAC_PI_2 * t.cosh() * delta * (2.0 - delta);
                FiniteNode { delta, weight }
            })
            .filter(|n| n.delta > 0.0)
            .collect()
    })
}

/// Exp-sinh node pair at `±t`: offsets `exp(±(π/2) sinh t)` from the lower
/// endpoint and their Jacobians.
struct HalfLineNode {
    outer_offset: f64,
    outer_weight: f64,
    inner_offset: f64,
    inner_weight: f64,
}

fn half_line_nodes(level: usize) -> &'static [HalfLineNode] {
    static TABLES: [OnceLock<Vec<HalfLineNode>>; MAX_LEVELS + 1] =
        [const { OnceLock::new() }; MAX_LEVELS + 1];
    TABLES[level].get_or_init(|| {
        new_abscissae(level)
            .map(|t| {
                let s = FRAC_PI_2 * t.sinh();
                let jacobian = FRAC_PI_2 * t.cosh();
                let outer_offset = s.exp();
                let inner_offset = (-s).exp();
                HalfLineNode {
                    outer_offset,
                    outer_weight: jacobian * outer_offset,
                    inner_offset,
                    inner_weight: jacobian * inner_offset,
                }
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    /// π / agm(1, √2), computed without quadrature.
    fn varpi_oracle() -> f64 {
        PI / crate::numerics::agm(1.0, SQRT_2).unwrap()
    }

    #[test]
    fn empty_interval_is_zero() {
        let r = integrate(|_| panic!("must not evaluate"), Interval::new(0.0, 0.0), &tol()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn polynomial_and_smooth() {
        let r = integrate(|x| x * x, Interval::new(0.0, 3.0), &tol()).unwrap();
        assert!((r.value - 9.0).abs() < 1e-13, "{r:?}");
        let r = integrate(f64::exp, Interval::new(-1.0, 2.0), &tol()).unwrap();
        assert!((r.value - (2f64.exp() - (-1f64).exp())).abs() < 1e-13);
        assert!(r.evaluations >= 1);
        assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn lemniscate_quarter_period() {
        // 1 - r^4 = (1 - r)(1 + r)(1 + r^2) with 1 - r taken from the node.
        let r = integrate_abscissa(
            |a| {
                let x = a.x;
                1.0 / (a.to_hi * (1.0 + x) * (1.0 + x * x)).sqrt()
            },
            Interval::new(0.0, 1.0),
            &tol(),
        )
        .unwrap();
        assert!((r.value - 1.311_028_777_146_059_9).abs() < 1e-14, "{r:?}");
        assert!((r.value - varpi_oracle() / 2.0).abs() < 1e-11);
    }

    #[test]
    fn improper_hyperbolic_integral() {
        let f = |v: f64| 1.0 / (1.0 + v.powi(4)).sqrt();
        let full = integrate(f, Interval::to_infinity(0.0), &tol()).unwrap();
        let unit = integrate(f, Interval::new(0.0, 1.0), &tol()).unwrap();
        assert!((full.value - 1.854_074_677_301_371_9).abs() < 1e-13, "{full:?}");
        // v -> 1/v maps [1, ∞) onto (0, 1]
        assert!((full.value - 2.0 * unit.value).abs() < 1e-13);
        assert!((full.value - varpi_oracle() / SQRT_2).abs() < 1e-11);
    }

    #[test]
    fn inverse_sqrt_singularity_with_complement() {
        let r = integrate_abscissa(|a| 1.0 / a.to_hi.sqrt(), Interval::new(0.0, 1.0), &tol()).unwrap();
        assert!((r.value - 2.0).abs() <= 1e-12, "{r:?}");
        let r = integrate_abscissa(|a| 1.0 / a.from_lo.sqrt(), Interval::new(2.0, 6.0), &tol()).unwrap();
        assert!((r.value - 4.0).abs() <= 1e-12, "{r:?}");
    }

    #[test]
    fn inverse_sqrt_singularity_plain_never_hits_endpoint() {
        // Only the sub-ulp tail is lost.
        let r = integrate(|x| 1.0 / (1.0 - x).sqrt(), Interval::new(0.0, 1.0), &tol());
        match r {
            Ok(r) => assert!((r.value - 2.0).abs() < 1e-7, "{r:?}"),
            Err(Error::NonConvergence { best, .. }) => assert!((best - 2.0).abs() < 1e-7),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let f = |x: f64| x;
        assert!(matches!(integrate(f, Interval::new(1.0, 0.0), &tol()), Err(Error::Domain(_))));
        assert!(matches!(
            integrate(f, Interval::new(f64::NAN, 0.0), &tol()),
            Err(Error::Domain(_))
        ));
        let bad = ToleranceConfig { max_levels: 0, ..tol() };
        assert!(matches!(integrate(f, Interval::new(0.0, 1.0), &bad), Err(Error::Domain(_))));
        let bad = ToleranceConfig { abs_tol: 0.0, ..tol() };
        assert!(matches!(integrate(f, Interval::new(0.0, 1.0), &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn non_finite_interior_value_is_a_domain_error() {
        let r = integrate(|x| 1.0 / (x - 0.5), Interval::new(0.0, 1.0), &tol());
        assert!(matches!(r, Err(Error::Domain(_))), "{r:?}");
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        let cfg = ToleranceConfig {
            abs_tol: 1e-300,
            rel_tol: 1e-300,
            max_levels: 4,
        };
        match integrate(|x| x.sin(), Interval::new(0.0, 1.0), &cfg) {
            Err(Error::NonConvergence { best, steps, .. }) => {
                assert!((best - (1.0 - 1f64.cos())).abs() < 1e-12);
                assert_eq!(steps, 4);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn nodes_stay_interior() {
        for level in 0..8 {
            for n in finite_nodes(level) {
                assert!(n.delta > 0.0 && n.delta < 1.0);
                assert!(n.weight > 0.0);
            }
        }
    }
}
