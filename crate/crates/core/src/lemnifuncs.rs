//! Lemniscate constant, lemniscate sine and cosine, hyperbolic lemniscate
//! sine, and the squigonometric functions.
//!
//! Every function is the inverse of one of the arc-length or area integrals in
//! [`crate::curves`], computed by safeguarded Newton iteration with the
//! integrand as the analytic derivative. Near the top of the range the
//! inversion switches to a complementary variable (distance from the vertex
//! for `sl`, the `v → 1/v` image for `slh`) so that the solve stays
//! well-conditioned.

use std::f64::consts::SQRT_2;
use std::sync::OnceLock;

use crate::curves::{hyperbolic_integral, lemniscate_arc_radial, lemniscate_arc_to_vertex, CartesianPoint};
use crate::error::{check_closed, Error, Result};
use crate::numerics::{gamma, solve_monotone_newton, Interval, ToleranceConfig};

/// Residual tolerance of the integral inversions.
const INVERSION_TOL: f64 = 1e-13;

/// Default distance kept from the pole of `slh` at `ϖ/√2`.
pub const SLH_GUARD: f64 = 1e-6;

fn quadrature() -> ToleranceConfig {
    ToleranceConfig::default()
}

/// Finds the zero of the increasing `g` on `[0, 1]`, then applies one
/// more Newton correction from the final residual so the root is not left
/// at the first point that merely meets the stopping tolerance.
fn invert_increasing<G, D>(g: G, mut dg: D, guess: f64) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
    D: FnMut(f64) -> f64,
{
    let r = solve_monotone_newton(g, &mut dg, Interval::new(0.0, 1.0), INVERSION_TOL, guess)?;
    let slope = dg(r.root);
    let polished = r.root - r.residual / slope;
    Ok(if polished.is_finite() { polished.clamp(0.0, 1.0) } else { r.root })
}

/// The lemniscate constant `ϖ = 2 ∫₀¹ dr / √(1 − r⁴)`, computed once.
pub fn varpi() -> Result<f64> {
    static VARPI: OnceLock<Result<f64>> = OnceLock::new();
    VARPI
        .get_or_init(|| lemniscate_arc_radial(0.0, 1.0, &quadrature()).map(|l| 2.0 * l))
        .clone()
}

/// `∫₀^∞ dv / √(1 + v⁴)`, the twice-area of a squircle quadrant and the pole
/// of `slh`. Computed once, by exp-sinh quadrature.
pub fn slh_limit() -> Result<f64> {
    static LIMIT: OnceLock<Result<f64>> = OnceLock::new();
    LIMIT
        .get_or_init(|| hyperbolic_integral(f64::INFINITY, &quadrature()))
        .clone()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub varpi: f64,
    pub gamma_quarter: f64,
    pub squircle_area: f64,
}

impl Constants {
    pub fn get() -> Result<Constants> {
        let varpi = varpi()?;
        Ok(Constants {
            varpi,
            gamma_quarter: gamma(0.25)?,
            squircle_area: SQRT_2 * varpi,
        })
    }
}

/// Lemniscate sine on `[0, ϖ/2]`: the radius `s` reached after an arc length
/// `u` measured from the origin.
pub fn sl(u: f64) -> Result<f64> {
    let half = 0.5 * varpi()?;
    let u = check_closed("sl", u, 0.0, half, "[0, ϖ/2]")?;
    sl_core(u, half)
}

fn sl_core(u: f64, half: f64) -> Result<f64> {
    if u == 0.0 {
        return Ok(0.0);
    }
    let tol = quadrature();
    if u <= 0.5 * half {
        return invert_increasing(
            |s| Ok(lemniscate_arc_radial(0.0, s, &tol)? - u),
            |s| 1.0 / ((1.0 - s) * (1.0 + s) * (1.0 + s * s)).sqrt(),
            u,
        );
    }
    // Solve for q = 1 − s from the arc remaining to the vertex.
    let remaining = half - u;
    if remaining == 0.0 {
        return Ok(1.0);
    }
    let q = invert_increasing(
        |q| Ok(lemniscate_arc_to_vertex(q, &tol)? - remaining),
        |q| 1.0 / (q * (2.0 - q) * (2.0 - 2.0 * q + q * q)).sqrt(),
        remaining * remaining,
    )?;
    Ok(1.0 - q)
}

/// Lemniscate cosine on `[0, ϖ/2]`, `cl(u) = sl(ϖ/2 − u)`: the radius reached
/// after an arc length `u` measured from the vertex.
pub fn cl(u: f64) -> Result<f64> {
    let half = 0.5 * varpi()?;
    let u = check_closed("cl", u, 0.0, half, "[0, ϖ/2]")?;
    sl_core(half - u, half)
}

/// `sl` on the whole real line: odd, `sl(ϖ − u) = sl(u)`, period `2ϖ`.
pub fn extend_sl(u: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::domain(format!("extend_sl: argument {u} is not finite")));
    }
    let period = varpi()?;
    let mut v = u;
    if v <= -period || v > period {
        v = v.rem_euclid(2.0 * period);
        if v > period {
            v -= 2.0 * period;
        }
    }
    let sign = if v < 0.0 { -1.0 } else { 1.0 };
    let mut v = v.abs();
    if v > 0.5 * period {
        v = period - v;
    }
    let half = 0.5 * period;
    Ok(sign * sl_core(v.clamp(0.0, half), half)?)
}

/// `cl` on the whole real line, `cl(u) = sl(ϖ/2 − u)`.
pub fn extend_cl(u: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::domain(format!("extend_cl: argument {u} is not finite")));
    }
    extend_sl(0.5 * varpi()? - u)
}

/// Hyperbolic lemniscate sine, the inverse of `s ↦ ∫₀^s dv / √(1 + v⁴)`, on
/// `[0, ϖ/√2 − SLH_GUARD]`.
pub fn slh(t: f64) -> Result<f64> {
    slh_guarded(t, SLH_GUARD)
}

/// [`slh`] with an explicit distance `guard` from the pole.
pub fn slh_guarded(t: f64, guard: f64) -> Result<f64> {
    if !(guard > 0.0) {
        return Err(Error::domain(format!("slh: guard must be positive, got {guard}")));
    }
    let limit = slh_limit()?;
    let top = limit - guard;
    if t.is_nan() || t < 0.0 || t > top {
        return Err(Error::domain(format!(
            "slh: argument {t} outside [0, ϖ/√2 − {guard:e}] = [0, {top}]"
        )));
    }
    slh_core(t, limit)
}

fn slh_core(t: f64, limit: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    let tol = quadrature();
    let invert = |target: f64| {
        invert_increasing(
            |s| Ok(hyperbolic_integral(s, &tol)? - target),
            |s| 1.0 / (1.0 + s.powi(4)).sqrt(),
            target,
        )
    };
    if t <= 0.5 * limit {
        return invert(t);
    }
    // ∫_s^∞ = ∫_0^{1/s}, so slh(t) = 1 / slh(limit − t).
    let w = invert(limit - t)?;
    if w == 0.0 {
        return Err(Error::domain(format!("slh: argument {t} is at the pole")));
    }
    Ok(1.0 / w)
}

/// `(cos₄ t, sin₄ t)` for `t ∈ [0, ϖ/√2]`: the first-quadrant squircle point
/// whose sector, swept from the positive x-axis, has area `t / 2`.
pub fn squig_point(t: f64) -> Result<CartesianPoint> {
    let limit = slh_limit()?;
    let t = check_closed("cos4/sin4", t, 0.0, limit, "[0, ϖ/√2]")?;
    let octant = |t: f64| -> Result<(f64, f64)> {
        let slope = slh_core(t, limit)?;
        let x = (1.0 + slope.powi(4)).powf(-0.25);
        Ok((x, slope * x))
    };
    if t <= 0.5 * limit {
        let (x, y) = octant(t)?;
        Ok(CartesianPoint { x, y })
    } else {
        // reflect in y = x
        let (x, y) = octant(limit - t)?;
        Ok(CartesianPoint { x: y, y: x })
    }
}

pub fn cos4(t: f64) -> Result<f64> {
    squig_point(t).map(|p| p.x)
}

pub fn sin4(t: f64) -> Result<f64> {
    squig_point(t).map(|p| p.y)
}

/// `sin₄ t / cos₄ t` on `[0, ϖ/√2)`.
pub fn tan4(t: f64) -> Result<f64> {
    let p = squig_point(t)?;
    if p.x == 0.0 {
        return Err(Error::domain(format!("tan4: cos4 vanishes at t = {t}")));
    }
    Ok(p.y / p.x)
}

/// Right-hand side of the duplication formula for the lemniscate cosine,
/// `(−1 + 2cl²u + cl⁴u) / (1 + 2cl²u − cl⁴u)`.
pub fn cl_duplication(u: f64) -> Result<f64> {
    let c = extend_cl(u)?;
    let c2 = c * c;
    let den = 1.0 + 2.0 * c2 - c2 * c2;
    if den.abs() <= 1e-12 {
        return Err(Error::domain(format!("cl_duplication: denominator vanishes at u = {u}")));
    }
    Ok((-1.0 + 2.0 * c2 + c2 * c2) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, eps: f64) -> bool {
        (a - b).abs() <= eps
    }

    const VARPI: f64 = 2.622_057_554_292_119_8;
    const SL_MID: f64 = 0.643_594_252_905_582_6; // √(√2 − 1)

    #[test]
    fn varpi_matches_agm() {
        let w = varpi().unwrap();
        assert!(close(w, PI / crate::numerics::agm(1.0, SQRT_2).unwrap(), 1e-11));
        assert!(close(w, VARPI, 1e-15));
        assert!(close(SQRT_2 * w, 3.708_149_354_602_743_8, 1e-14));
        assert!(close(slh_limit().unwrap(), w / SQRT_2, 1e-14));
    }

    #[test]
    fn constants() {
        let c = Constants::get().unwrap();
        assert_eq!(c.varpi, varpi().unwrap());
        assert!(close(c.gamma_quarter, 3.625_609_908_221_908_3, 1e-14));
        assert!(close(c.squircle_area / c.varpi, SQRT_2, 1e-15));
    }

    #[test]
    fn sl_examples() {
        assert_eq!(sl(0.0).unwrap(), 0.0);
        assert_eq!(sl(VARPI / 2.0).unwrap(), 1.0);
        assert!(close(sl(VARPI / 4.0).unwrap(), SL_MID, 1e-13));
        // mpmath
        assert!(close(sl(0.3).unwrap(), 0.299_757_163_912_656_8, 1e-14));
        assert!(close(sl(0.5).unwrap(), 0.496_891_190_419_311_94, 1e-14));
        assert!(sl(-0.1).is_err());
        assert!(sl(1.4).is_err());
    }

    #[test]
    fn cl_examples() {
        assert_eq!(cl(0.0).unwrap(), 1.0);
        assert_eq!(cl(0.5 * varpi().unwrap()).unwrap(), 0.0);
        assert!(close(cl(VARPI / 2.0).unwrap(), 0.0, 1e-15));
        assert!(close(cl(VARPI / 4.0).unwrap(), SL_MID, 1e-13));
        assert!(close(cl(0.6).unwrap(), 0.693_234_277_610_958_3, 1e-14));
        let err = cl(5.0).unwrap_err().to_string();
        assert!(err.contains("[0, ϖ/2]"), "{err}");
    }

    #[test]
    fn extensions() {
        assert!(close(extend_sl(VARPI).unwrap(), 0.0, 1e-15));
        assert!(close(extend_sl(-VARPI / 2.0).unwrap(), -1.0, 1e-15));
        assert!(close(extend_cl(VARPI).unwrap(), -1.0, 1e-15));
        assert!(close(extend_sl(0.3 + 2.0 * VARPI).unwrap(), sl(0.3).unwrap(), 1e-13));
        assert!(close(extend_sl(-0.3).unwrap(), -sl(0.3).unwrap(), 1e-15));
        assert!(close(extend_sl(VARPI - 0.3).unwrap(), sl(0.3).unwrap(), 1e-13));
        assert!(extend_sl(f64::INFINITY).is_err());
    }

    #[test]
    fn slh_examples() {
        assert_eq!(slh(0.0).unwrap(), 0.0);
        let mid = VARPI / (2.0 * SQRT_2);
        assert!(close(slh(mid).unwrap(), 1.0, 1e-13));
        // mpmath: 0.5031413625745684980791152199651278495861
        let s = slh(0.5).unwrap();
        assert!(close(s, 0.503_141_362_574_568_5, 1e-14));
        let back = hyperbolic_integral(s, &ToleranceConfig::default()).unwrap();
        assert!(close(back, 0.5, 1e-12));
        assert!(slh(-1e-3).is_err());
        assert!(slh(VARPI / SQRT_2).is_err());
        assert!(slh(VARPI / SQRT_2 - 2e-6).is_ok());
        assert!(slh_guarded(VARPI / SQRT_2 - 2e-9, 1e-9).unwrap() > 1e8);
    }

    #[test]
    fn squig_examples() {
        let limit = VARPI / SQRT_2;
        let p = squig_point(0.0).unwrap();
        assert_eq!((p.x, p.y), (1.0, 0.0));
        let p = squig_point(slh_limit().unwrap()).unwrap();
        assert_eq!((p.x, p.y), (0.0, 1.0));
        let p = squig_point(limit).unwrap();
        assert!(close(p.x, 0.0, 1e-14) && p.y == 1.0);
        let p = squig_point(limit / 2.0).unwrap();
        assert!(close(p.x, 0.840_896_415_253_714_5, 1e-13));
        assert!(close(p.y, 0.840_896_415_253_714_5, 1e-13));
        assert!(squig_point(limit + 1e-3).is_err());
    }

    #[test]
    fn tan4_examples() {
        assert_eq!(tan4(0.0).unwrap(), 0.0);
        assert!(close(tan4(VARPI / (2.0 * SQRT_2)).unwrap(), 1.0, 1e-13));
        assert!(close(tan4(0.5).unwrap(), slh(0.5).unwrap(), 1e-11));
        assert!(tan4(slh_limit().unwrap()).is_err());
        assert!(close(tan4(1.5).unwrap(), slh(1.5).unwrap(), 1e-11));
    }

    #[test]
    fn duplication_examples() {
        assert_eq!(cl_duplication(0.0).unwrap(), 1.0);
        assert!(close(cl_duplication(VARPI / 4.0).unwrap(), 0.0, 1e-13));
        assert!(close(cl_duplication(0.3).unwrap(), cl(0.6).unwrap(), 1e-11));
    }
}
