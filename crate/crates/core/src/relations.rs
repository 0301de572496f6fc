//! Identity verification: each relation becomes a residual function sampled
//! over a grid, summarised as an [`IdentityReport`].

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{
    beta_of_alpha, d_of_alpha, d_of_b, hyperbolic_integral, lemniscate_arc_radial, lemniscate_arc_theta,
    lemniscate_arc_to_vertex, siegel_r_of_t, squircle_quadrant_area_cartesian,
    squircle_sector_area, tan_alpha_of_r, Angle,
};
use crate::error::{Error, Result};
use crate::lemnifuncs::{cl, cl_duplication, extend_cl, sl, slh, squig_point, tan4, varpi};
use crate::numerics::{gamma, ToleranceConfig};

/// Default pass threshold for every identity.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Default distance kept from both ends of a sampling interval.
pub const DEFAULT_INSET: f64 = 1e-6;
/// Sample count for angle and radius grids.
pub const GEOMETRY_GRID_N: usize = 257;
/// Sample count for grids over the argument of a lemniscatic function.
pub const FUNCTION_GRID_N: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub endpoint_inset: f64,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, n: usize) -> Self {
        GridSpec { lo, hi, n, endpoint_inset: DEFAULT_INSET }
    }

    pub fn with_n(self, n: usize) -> Self {
        GridSpec { n, ..self }
    }

    pub fn with_inset(self, endpoint_inset: f64) -> Self {
        GridSpec { endpoint_inset, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::domain(format!("grid needs at least 2 points, got {}", self.n)));
        }
        let (a, b) = self.span();
        if !(self.endpoint_inset >= 0.0 && a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::domain(format!(
                "grid [{}, {}] with inset {} is empty",
                self.lo, self.hi, self.endpoint_inset
            )));
        }
        Ok(())
    }

    fn span(&self) -> (f64, f64) {
        (self.lo + self.endpoint_inset, self.hi - self.endpoint_inset)
    }

    /// The `n` equally spaced sample points; the last is exactly `hi − inset`.
    pub fn points(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let (a, b) = self.span();
        let last = self.n - 1;
        let step = (b - a) / last as f64;
        Ok((0..self.n)
            .map(|k| if k == last { b } else { a + k as f64 * step })
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    /// `None` for identities between constants, which have no sampling grid.
    #[serde(skip)]
    pub grid: Option<GridSpec>,
    pub max_abs_residual: f64,
    /// Grid point of the largest residual; for constant identities, the index
    /// of the worst pair (0: first–second, 1: second–third, 2: first–third).
    pub argmax: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
    /// Samples whose evaluation failed, with the reason. Each counts as an
    /// infinite residual.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<SampleError>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleError {
    pub at: f64,
    pub message: String,
}

impl IdentityReport {
    fn from_residuals(
        name: &str,
        grid: Option<GridSpec>,
        locations: &[f64],
        residuals: Vec<Result<f64>>,
        tolerance: f64,
    ) -> Self {
        let mut max_abs_residual = 0.0_f64;
        let mut argmax = locations.first().copied().unwrap_or(0.0);
        let mut errors = Vec::new();
        for (&at, r) in locations.iter().zip(residuals) {
            let size = match r {
                Ok(v) if v.is_finite() => v.abs(),
                Ok(v) => {
                    errors.push(SampleError { at, message: format!("non-finite residual {v}") });
                    f64::INFINITY
                }
                Err(e) => {
                    errors.push(SampleError { at, message: e.to_string() });
                    f64::INFINITY
                }
            };
            // strict comparison keeps the earliest point on ties
            if size > max_abs_residual {
                max_abs_residual = size;
                argmax = at;
            }
        }
        IdentityReport {
            name: name.to_owned(),
            grid,
            max_abs_residual,
            argmax,
            tolerance,
            pass: max_abs_residual <= tolerance,
            samples: locations.len(),
            errors,
        }
    }

    /// True when some sample could not be evaluated at all.
    pub fn has_errors(&self) -> bool {
        !self.errors.is_empty()
    }
}

/// The verified identities, in name order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    ArcEquality,
    AreaCorollary,
    Duplication,
    FinalRemark,
    Historic,
    Pythagorean,
    Siegel,
    SlhRelation,
    SquigRelation,
    Tan4Relation,
    Theorem1,
    Theorem2,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::ArcEquality,
        Identity::AreaCorollary,
        Identity::Duplication,
        Identity::FinalRemark,
        Identity::Historic,
        Identity::Pythagorean,
        Identity::Siegel,
        Identity::SlhRelation,
        Identity::SquigRelation,
        Identity::Tan4Relation,
        Identity::Theorem1,
        Identity::Theorem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ArcEquality => "arc_equality",
            Identity::AreaCorollary => "area_corollary",
            Identity::Duplication => "duplication",
            Identity::FinalRemark => "final_remark",
            Identity::Historic => "historic",
            Identity::Pythagorean => "pythagorean",
            Identity::Siegel => "siegel",
            Identity::SlhRelation => "slh_relation",
            Identity::SquigRelation => "squig_relation",
            Identity::Tan4Relation => "tan4_relation",
            Identity::Theorem1 => "theorem1",
            Identity::Theorem2 => "theorem2",
        }
    }

    /// Default sampling grid, or `None` for identities between constants.
    pub fn default_grid(self) -> Result<Option<GridSpec>> {
        let geometry = |hi: f64| Some(GridSpec::new(0.0, hi, GEOMETRY_GRID_N));
        let function = |hi: f64| Some(GridSpec::new(0.0, hi, FUNCTION_GRID_N));
        Ok(match self {
            Identity::Historic | Identity::AreaCorollary => None,
            Identity::Theorem1 | Identity::ArcEquality => geometry(FRAC_PI_4),
            Identity::Theorem2 | Identity::Siegel | Identity::FinalRemark => geometry(1.0),
            Identity::SquigRelation => function(varpi()? / (2.0 * SQRT_2)),
            Identity::Tan4Relation => function(0.25 * varpi()?),
            Identity::SlhRelation | Identity::Pythagorean | Identity::Duplication => {
                function(0.5 * varpi()?)
            }
        })
    }

    /// Residual at one grid point. Identities between constants have none.
    pub fn residual(self, x: f64) -> Result<f64> {
        let tol = ToleranceConfig::default();
        match self {
            Identity::Theorem1 => {
                let alpha = Angle(x);
                let l = lemniscate_arc_theta(Angle::ZERO, beta_of_alpha(alpha)?, &tol)?;
                Ok(l - 2.0 * SQRT_2 * squircle_sector_area(alpha, &tol)?)
            }
            Identity::Theorem2 => {
                let l = lemniscate_arc_radial(0.0, d_of_b(x)?, &tol)?;
                let alpha = Angle(tan_alpha_of_r(x)?.atan());
                Ok(l - 2.0 * SQRT_2 * squircle_sector_area(alpha, &tol)?)
            }
            Identity::Siegel => {
                let lhs = lemniscate_arc_radial(0.0, siegel_r_of_t(x)?, &tol)?;
                Ok(lhs - SQRT_2 * hyperbolic_integral(x, &tol)?)
            }
            Identity::ArcEquality => {
                let alpha = Angle(x);
                let l1 = lemniscate_arc_radial(0.0, d_of_alpha(alpha)?, &tol)?;
                let l2 = lemniscate_arc_theta(Angle::ZERO, beta_of_alpha(alpha)?, &tol)?;
                Ok(l1 - l2)
            }
            Identity::SquigRelation => {
                let p = squig_point(x)?;
                let (c2, s2) = (p.x * p.x, p.y * p.y);
                Ok(cl(SQRT_2 * x)? - (c2 - s2) / (c2 + s2))
            }
            Identity::Tan4Relation => {
                let t = tan4(SQRT_2 * x)?;
                let c = cl(2.0 * x)?;
                Ok(t * t - (1.0 - c) / (1.0 + c))
            }
            Identity::SlhRelation => {
                let (s, c) = (sl(x)?, cl(x)?);
                if c == 0.0 {
                    return Err(Error::domain(format!("slh_relation: cl vanishes at u = {x}")));
                }
                let rhs = s * (1.0 + c * c) / (SQRT_2 * c);
                // slh grows like 1/(ϖ/√2 − t) near its pole, where an absolute
                // difference is dominated by rounding of the argument.
                Ok((slh(SQRT_2 * x)? - rhs) / rhs.abs().max(1.0))
            }
            Identity::Pythagorean => {
                let (s2, c2) = (sl(x)?.powi(2), cl(x)?.powi(2));
                Ok(c2 + s2 + c2 * s2 - 1.0)
            }
            Identity::Duplication => Ok(cl_duplication(x)? - extend_cl(2.0 * x)?),
            Identity::FinalRemark => {
                // ∫_{R²}^1 written in the distance 1 − R² from the vertex
                let lhs = lemniscate_arc_to_vertex((1.0 - x) * (1.0 + x), &tol)?;
                Ok(lhs - SQRT_2 * hyperbolic_integral(tan_alpha_of_r(x)?, &tol)?)
            }
            Identity::Historic | Identity::AreaCorollary => Err(Error::domain(format!(
                "{} compares constants and has no residual function",
                self.name()
            ))),
        }
    }

    /// The three values an identity between constants asserts are equal.
    pub fn members(self) -> Result<[f64; 3]> {
        let tol = ToleranceConfig::default();
        match self {
            Identity::Historic => {
                let q1 = lemniscate_arc_radial(0.0, 1.0, &tol)?;
                let q2 = gamma(0.25)?.powi(2) / (4.0 * (2.0 * PI).sqrt());
                let q3 = SQRT_2 * squircle_quadrant_area_cartesian(&tol)?;
                Ok([q1, q2, q3])
            }
            Identity::AreaCorollary => {
                let sectors = 8.0 * squircle_sector_area(Angle::OCTANT, &tol)?;
                let cartesian = 4.0 * squircle_quadrant_area_cartesian(&tol)?;
                Ok([sectors, cartesian, SQRT_2 * varpi()?])
            }
            _ => Err(Error::domain(format!("{} is checked over a grid", self.name()))),
        }
    }

    /// Runs the check. `grid` overrides the default grid; `offset` is added
    /// to every residual (to the first member for constant identities) so
    /// that callers can confirm a systematic error is caught.
    pub fn verify_with(self, grid: Option<GridSpec>, tol: f64, offset: f64) -> Result<IdentityReport> {
        if tol.is_nan() || tol < 0.0 {
            return Err(Error::domain(format!("verification tolerance must be non-negative, got {tol}")));
        }
        let Some(grid) = grid.or(self.default_grid()?) else {
            let mut m = self.members()?;
            m[0] += offset;
            let pairs = [(0, 1), (1, 2), (0, 2)];
            let locations = [0.0, 1.0, 2.0];
            let residuals = pairs.iter().map(|&(i, j)| Ok(m[i] - m[j])).collect();
            return Ok(IdentityReport::from_residuals(self.name(), None, &locations, residuals, tol));
        };
        if self.members().is_ok() {
            return Err(Error::domain(format!("{} does not take a grid", self.name())));
        }
        let points = grid.points()?;
        let residuals: Vec<Result<f64>> = points
            .par_iter()
            .map(|&x| self.residual(x).map(|r| r + offset))
            .collect();
        Ok(IdentityReport::from_residuals(self.name(), Some(grid), &points, residuals, tol))
    }

    pub fn verify(self, grid: Option<GridSpec>, tol: f64) -> Result<IdentityReport> {
        self.verify_with(grid, tol, 0.0)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
                Error::domain(format!("unknown identity {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// A systematic offset injected into one identity's residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Perturbation {
    pub target: Identity,
    pub offset: f64,
}

pub fn verify_theorem1(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Theorem1.verify(Some(grid), tol)
}

pub fn verify_theorem2(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Theorem2.verify(Some(grid), tol)
}

pub fn verify_siegel(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Siegel.verify(Some(grid), tol)
}

pub fn verify_arc_equality(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::ArcEquality.verify(Some(grid), tol)
}

pub fn verify_squig_relation(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::SquigRelation.verify(Some(grid), tol)
}

pub fn verify_tan4_relation(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Tan4Relation.verify(Some(grid), tol)
}

pub fn verify_slh_relation(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::SlhRelation.verify(Some(grid), tol)
}

pub fn verify_pythagorean(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Pythagorean.verify(Some(grid), tol)
}

pub fn verify_duplication(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::Duplication.verify(Some(grid), tol)
}

pub fn verify_final_remark(grid: GridSpec, tol: f64) -> Result<IdentityReport> {
    Identity::FinalRemark.verify(Some(grid), tol)
}

pub fn verify_historic(tol: f64) -> Result<IdentityReport> {
    Identity::Historic.verify(None, tol)
}

pub fn verify_area_corollary(tol: f64) -> Result<IdentityReport> {
    Identity::AreaCorollary.verify(None, tol)
}

/// Every identity on its default grid, in name order.
pub fn verify_all(tol: f64) -> Result<Vec<IdentityReport>> {
    verify_selected(&Identity::ALL, None, tol, None)
}

/// Runs `identities` (reported in the given order). `grid_n` overrides the
/// sample count of every gridded identity. A failing sample never aborts the
/// run; it shows up in the report instead.
pub fn verify_selected(
    identities: &[Identity],
    grid_n: Option<usize>,
    tol: f64,
    perturbation: Option<Perturbation>,
) -> Result<Vec<IdentityReport>> {
    identities
        .par_iter()
        .map(|&id| {
            let grid = match (id.default_grid()?, grid_n) {
                (Some(g), Some(n)) => Some(g.with_n(n)),
                (g, _) => g,
            };
            let offset = match perturbation {
                Some(p) if p.target == id => p.offset,
                _ => 0.0,
            };
            id.verify_with(grid, tol, offset)
        })
        .collect()
}
