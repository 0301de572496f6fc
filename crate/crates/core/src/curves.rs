//! The lemniscate `(x² + y²)² = x² − y²` and the squircle `x⁴ + y⁴ = 1`.
//!
//! Everything here works in the first octant or first quadrant; whole-figure
//! quantities are assembled by callers from the symmetries. The octant
//! boundary π/4 is identified with [`FRAC_PI_4`] and `cos 2θ` is evaluated as
//! `sin(2(FRAC_PI_4 − θ))`, so it vanishes exactly at the boundary and keeps
//! full relative precision next to it. This matters for the arc-length
//! integral, whose integrand `1/√cos 2θ` is singular there.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, SQRT_2};

use crate::error::{check_closed, Error, Result};
use crate::numerics::{integrate, integrate_abscissa, Interval, ToleranceConfig};

/// An angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(pub f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const OCTANT: Angle = Angle(FRAC_PI_4);
    pub const QUADRANT: Angle = Angle(FRAC_PI_2);

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Angle(radians)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: Angle,
}

impl PolarPoint {
    pub fn to_cartesian(self) -> CartesianPoint {
        let (sin, cos) = self.theta.0.sin_cos();
        CartesianPoint {
            x: self.r * cos,
            y: self.r * sin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

impl CartesianPoint {
    pub const ORIGIN: CartesianPoint = CartesianPoint { x: 0.0, y: 0.0 };

    pub fn radius(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn to_polar(self) -> PolarPoint {
        PolarPoint {
            r: self.radius(),
            theta: Angle(self.y.atan2(self.x)),
        }
    }

    /// `(x² + y²)² − (x² − y²)`.
    pub fn lemniscate_residual(self) -> f64 {
        let (x2, y2) = (self.x * self.x, self.y * self.y);
        (x2 + y2) * (x2 + y2) - (x2 - y2)
    }

    /// `x⁴ + y⁴ − 1`.
    pub fn squircle_residual(self) -> f64 {
        self.x.powi(4) + self.y.powi(4) - 1.0
    }
}

/// `cos 2θ` computed as `sin(2(FRAC_PI_4 − θ))`.
fn cos_double(theta: f64) -> f64 {
    (2.0 * (FRAC_PI_4 - theta)).sin()
}

fn octant_angle(what: &str, theta: Angle) -> Result<f64> {
    check_closed(what, theta.0, 0.0, FRAC_PI_4, "[0, π/4]")
}

fn quadrant_angle(what: &str, theta: Angle) -> Result<f64> {
    check_closed(what, theta.0, 0.0, FRAC_PI_2, "[0, π/2]")
}

fn unit(what: &str, value: f64) -> Result<f64> {
    check_closed(what, value, 0.0, 1.0, "[0, 1]")
}

/// Polar equation of the lemniscate in the first quadrant, `r = √cos 2θ`.
pub fn lemniscate_r(theta: Angle) -> Result<f64> {
    let theta = octant_angle("lemniscate_r", theta)?;
    Ok(cos_double(theta).max(0.0).sqrt())
}

/// The lemniscate point at polar angle `theta`.
pub fn lemniscate_point(theta: Angle) -> Result<CartesianPoint> {
    let r = lemniscate_r(theta)?;
    Ok(PolarPoint { r, theta }.to_cartesian())
}

/// First-quadrant lemniscate point at radial distance `r`:
/// `(r √((1 + r²)/2), r √((1 − r²)/2))`.
pub fn lemniscate_point_from_r(r: f64) -> Result<CartesianPoint> {
    let r = unit("lemniscate_point_from_r", r)?;
    let one_minus_r2 = (1.0 - r) * (1.0 + r);
    Ok(CartesianPoint {
        x: r * (0.5 * (1.0 + r * r)).sqrt(),
        y: r * (0.5 * one_minus_r2).sqrt(),
    })
}

/// Squircle point `(√cos s, √sin s)` for `s ∈ [0, π/2]`.
pub fn squircle_point_param(s: Angle) -> Result<CartesianPoint> {
    let s = quadrant_angle("squircle_point_param", s)?;
    // cos s as sin(π/2 − s) so that the far endpoint lands exactly on the axis
    Ok(CartesianPoint {
        x: (FRAC_PI_2 - s).sin().sqrt(),
        y: s.sin().sqrt(),
    })
}

/// Squircle polar equation in tangent form, `r² = sec²θ / √(1 + tan⁴θ)`.
/// Defined on `[0, π/2)`.
pub fn squircle_r2_tan(theta: Angle) -> Result<f64> {
    let t = theta.0;
    if !(0.0..FRAC_PI_2).contains(&t) {
        return Err(Error::domain(format!(
            "squircle_r2_tan: argument {t} outside [0, π/2)"
        )));
    }
    let tan = t.tan();
    let sec2 = 1.0 + tan * tan;
    Ok(sec2 / (1.0 + tan.powi(4)).sqrt())
}

/// Squircle polar equation in double-angle form, `r² = √2 / √(1 + cos²2θ)`.
pub fn squircle_r2_cos(theta: Angle) -> f64 {
    let c = (2.0 * theta.0).cos();
    SQRT_2 / (1.0 + c * c).sqrt()
}

/// Radial projection of the ray at `theta` onto the squircle:
/// `((1 + tan⁴θ)^(−1/4), tan θ (1 + tan⁴θ)^(−1/4))`.
pub fn radial_projection_to_squircle(theta: Angle) -> Result<CartesianPoint> {
    let theta = octant_angle("radial_projection_to_squircle", theta)?;
    let tan = theta.tan();
    let x = (1.0 + tan.powi(4)).powf(-0.25);
    Ok(CartesianPoint { x, y: tan * x })
}

/// Polar angle β of the lemniscate point C whose radius is the square of
/// the radius of the point B at angle α: `cos 2β = cos²2α`.
///
/// Evaluated as `2β = atan2(sin 2α √(1 + cos²2α), cos²2α)`, which agrees with
/// `½ arccos(cos²2α)` but does not lose digits near α = 0.
pub fn beta_of_alpha(alpha: Angle) -> Result<Angle> {
    let alpha = octant_angle("beta_of_alpha", alpha)?;
    let c = cos_double(alpha);
    let c2 = c * c;
    let sin_two_beta = (2.0 * alpha).sin() * (1.0 + c2).sqrt();
    Ok(Angle(0.5 * sin_two_beta.atan2(c2)))
}

/// `dβ/dα = 2 cos 2α / √(1 + cos²2α)`.
pub fn d_beta_d_alpha(alpha: Angle) -> Result<f64> {
    let alpha = octant_angle("d_beta_d_alpha", alpha)?;
    let c = cos_double(alpha);
    Ok(2.0 * c / (1.0 + c * c).sqrt())
}

/// Lemniscate arc length between two polar angles in `[0, π/4]`,
/// `∫ dθ / √cos 2θ`.
pub fn lemniscate_arc_theta(theta_lo: Angle, theta_hi: Angle, tol: &ToleranceConfig) -> Result<f64> {
    let lo = octant_angle("lemniscate_arc_theta", theta_lo)?;
    let hi = octant_angle("lemniscate_arc_theta", theta_hi)?;
    if lo > hi {
        return Err(Error::domain(format!(
            "lemniscate_arc_theta: angles out of order ({lo} > {hi})"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let offset = FRAC_PI_4 - hi;
    if offset > 0.0 && offset < NEAR_DIAGONAL {
        // The singularity at π/4 sits just past `hi`; integrate up to it and
        // subtract the piece beyond `hi`, each with the singularity at an end.
        let head = if lo >= 0.5 * FRAC_PI_4 {
            arc_from_diagonal(FRAC_PI_4 - lo, tol)?
        } else {
            lemniscate_arc_theta(Angle(lo), Angle::OCTANT, tol)?
        };
        return Ok(head - arc_from_diagonal(offset, tol)?);
    }
    let q = integrate_abscissa(
        |a| 1.0 / (2.0 * (offset + a.to_hi)).sin().sqrt(),
        Interval::new(lo, hi),
        tol,
    )?;
    Ok(q.value)
}

/// Below this distance from π/4 (or from radius 1) an upper limit counts as
/// close to the singularity of the arc-length integrand.
const NEAR_DIAGONAL: f64 = FRAC_PI_4 / 16.0;
const NEAR_VERTEX: f64 = 1.0 / 16.0;

/// `∫₀^φ dψ / √sin 2ψ`: arc length between polar angles `π/4 − φ` and `π/4`.
fn arc_from_diagonal(phi: f64, tol: &ToleranceConfig) -> Result<f64> {
    let q = integrate_abscissa(|a| 1.0 / (2.0 * a.from_lo).sin().sqrt(), Interval::new(0.0, phi), tol)?;
    Ok(q.value)
}

/// Lemniscate arc length between two radial distances in `[0, 1]`,
/// `∫ dr / √(1 − r⁴)`.
pub fn lemniscate_arc_radial(r_lo: f64, r_hi: f64, tol: &ToleranceConfig) -> Result<f64> {
    let lo = unit("lemniscate_arc_radial", r_lo)?;
    let hi = unit("lemniscate_arc_radial", r_hi)?;
    if lo > hi {
        return Err(Error::domain(format!(
            "lemniscate_arc_radial: radii out of order ({lo} > {hi})"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let gap = 1.0 - hi;
    if gap > 0.0 && gap < NEAR_VERTEX {
        // as in `lemniscate_arc_theta`, split at the singular end r = 1
        let head = if lo >= 0.5 {
            lemniscate_arc_to_vertex(1.0 - lo, tol)?
        } else {
            lemniscate_arc_radial(lo, 1.0, tol)?
        };
        return Ok(head - lemniscate_arc_to_vertex(gap, tol)?);
    }
    let q = integrate_abscissa(
        |a| {
            let r = a.x;
            1.0 / ((gap + a.to_hi) * (1.0 + r) * (1.0 + r * r)).sqrt()
        },
        Interval::new(lo, hi),
        tol,
    )?;
    Ok(q.value)
}

/// Arc length from radius `1 − q` out to the vertex `P = (1, 0)`, integrated
/// in the complement variable `p = 1 − r` so that `q` need not be
/// representable as a distance from 1.
pub fn lemniscate_arc_to_vertex(q: f64, tol: &ToleranceConfig) -> Result<f64> {
    let q = unit("lemniscate_arc_to_vertex", q)?;
    if q == 0.0 {
        return Ok(0.0);
    }
    // 1 − (1 − p)⁴ = p (2 − p)(2 − 2p + p²)
    let r = integrate_abscissa(
        |a| {
            let p = a.from_lo;
            1.0 / (p * (2.0 - p) * (2.0 - 2.0 * p + p * p)).sqrt()
        },
        Interval::new(0.0, q),
        tol,
    )?;
    Ok(r.value)
}

fn hyperbolic_integrand(v: f64) -> f64 {
    1.0 / (1.0 + v.powi(4)).sqrt()
}

/// `∫₀^s dv / √(1 + v⁴)` for `s ∈ [0, ∞]`. Upper limits beyond 1 are handled
/// as the improper integral minus an exp-sinh tail.
pub fn hyperbolic_integral(s: f64, tol: &ToleranceConfig) -> Result<f64> {
    if s.is_nan() || s < 0.0 {
        return Err(Error::domain(format!(
            "hyperbolic_integral: upper limit {s} outside [0, ∞]"
        )));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    if s <= 1.0 {
        return Ok(integrate(hyperbolic_integrand, Interval::new(0.0, s), tol)?.value);
    }
    let total = integrate(hyperbolic_integrand, Interval::to_infinity(0.0), tol)?.value;
    if s == f64::INFINITY {
        return Ok(total);
    }
    let tail = integrate(hyperbolic_integrand, Interval::to_infinity(s), tol)?.value;
    Ok(total - tail)
}

/// Area of the squircle sector swept from the positive x-axis to angle
/// `alpha ∈ [0, π/2]`: `(1/√2) ∫₀^α dθ / √(1 + cos²2θ)`.
pub fn squircle_sector_area(alpha: Angle, tol: &ToleranceConfig) -> Result<f64> {
    let alpha = quadrant_angle("squircle_sector_area", alpha)?;
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let q = integrate(
        |theta| {
            let c = (2.0 * theta).cos();
            1.0 / (1.0 + c * c).sqrt()
        },
        Interval::new(0.0, alpha),
        tol,
    )?;
    Ok(FRAC_1_SQRT_2 * q.value)
}

/// The same sector area from the tangent form of the polar equation:
/// `½ ∫₀^{tan α} dv / √(1 + v⁴)`, improper at `alpha = π/2`.
pub fn squircle_sector_area_tan(alpha: Angle, tol: &ToleranceConfig) -> Result<f64> {
    let alpha = quadrant_angle("squircle_sector_area_tan", alpha)?;
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let upper = if alpha >= FRAC_PI_2 { f64::INFINITY } else { alpha.tan() };
    Ok(0.5 * hyperbolic_integral(upper, tol)?)
}

/// Area of the squircle in the first quadrant from the Cartesian form,
/// `∫₀¹ (1 − x⁴)^(1/4) dx`.
pub fn squircle_quadrant_area_cartesian(tol: &ToleranceConfig) -> Result<f64> {
    let q = integrate_abscissa(
        |a| {
            let x = a.x;
            (a.to_hi * (1.0 + x) * (1.0 + x * x)).powf(0.25)
        },
        Interval::new(0.0, 1.0),
        tol,
    )?;
    Ok(q.value)
}

/// `R = √2 T / √(1 + T⁴)` for `T ∈ [0, 1]`.
pub fn siegel_r_of_t(t: f64) -> Result<f64> {
    let t = unit("siegel_r_of_t", t)?;
    Ok(SQRT_2 * t / (1.0 + t.powi(4)).sqrt())
}

/// Radius of D from the radius of B: `OD = √((1 − OB⁴) / (1 + OB⁴))`.
pub fn d_of_b(r: f64) -> Result<f64> {
    let r = unit("d_of_b", r)?;
    let r2 = r * r;
    let one_minus_r4 = (1.0 - r) * (1.0 + r) * (1.0 + r2);
    Ok((one_minus_r4 / (1.0 + r2 * r2)).sqrt())
}

/// `OD` for the lemniscate point B at polar angle α. With `OB⁴ = cos²2α` this
/// is `sin 2α / √(1 + cos²2α)`, the same value as `d_of_b(lemniscate_r(α))`
/// without the cancellation in `1 − OB⁴` near α = 0.
pub fn d_of_alpha(alpha: Angle) -> Result<f64> {
    let alpha = octant_angle("d_of_alpha", alpha)?;
    let c = cos_double(alpha);
    Ok((2.0 * alpha).sin() / (1.0 + c * c).sqrt())
}

/// Slope `tan α = y / x` of the lemniscate point at radius `R`:
/// `√((1 − R²) / (1 + R²))`.
pub fn tan_alpha_of_r(r: f64) -> Result<f64> {
    let r = unit("tan_alpha_of_r", r)?;
    Ok(((1.0 - r) * (1.0 + r) / (1.0 + r * r)).sqrt())
}
