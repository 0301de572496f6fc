//! Tabulation of the first-octant configuration as α runs over `[0, π/4]`.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use serde::Serialize;

use super::format::format_sig17;
use crate::curves::{
    beta_of_alpha, d_of_b, lemniscate_arc_theta, lemniscate_point, lemniscate_r, radial_projection_to_squircle,
    squircle_sector_area, Angle,
};
use crate::error::{Error, Result};
use crate::numerics::ToleranceConfig;

pub const SWEEP_HEADER: &str =
    "alpha,beta,r_B,x_B,y_B,x_Bprime,y_Bprime,r_C,r_D,arc_l,area_a,residual_thm1";

/// One configuration: B on the lemniscate at angle α, its radial projection
/// B′ on the squircle, C on the lemniscate with `OC = OB²` (polar angle β),
/// D with `OD² = (1 − OB⁴)/(1 + OB⁴)`, the arc `l` from C to P and the
/// sector area `a` of OPB′.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub beta: f64,
    pub r_b: f64,
    pub x_b: f64,
    pub y_b: f64,
    pub x_bprime: f64,
    pub y_bprime: f64,
    pub r_c: f64,
    pub r_d: f64,
    pub arc_l: f64,
    pub area_a: f64,
    pub residual_thm1: f64,
}

impl SweepRow {
    pub fn at(alpha: Angle, tol: &ToleranceConfig) -> Result<SweepRow> {
        let b = lemniscate_point(alpha)?;
        let b_prime = radial_projection_to_squircle(alpha)?;
        let r_b = lemniscate_r(alpha)?;
        let beta = beta_of_alpha(alpha)?;
        let arc_l = lemniscate_arc_theta(Angle::ZERO, beta, tol)?;
        let area_a = squircle_sector_area(alpha, tol)?;
        Ok(SweepRow {
            alpha: alpha.0,
            beta: beta.0,
            r_b,
            x_b: b.x,
            y_b: b.y,
            x_bprime: b_prime.x,
            y_bprime: b_prime.y,
            r_c: r_b * r_b,
            r_d: d_of_b(r_b)?,
            arc_l,
            area_a,
            residual_thm1: arc_l - 2.0 * SQRT_2 * area_a,
        })
    }

    fn fields(&self) -> [f64; 12] {
        [
            self.alpha,
            self.beta,
            self.r_b,
            self.x_b,
            self.y_b,
            self.x_bprime,
            self.y_bprime,
            self.r_c,
            self.r_d,
            self.arc_l,
            self.area_a,
            self.residual_thm1,
        ]
    }

    fn from_fields(f: [f64; 12]) -> SweepRow {
        SweepRow {
            alpha: f[0],
            beta: f[1],
            r_b: f[2],
            x_b: f[3],
            y_b: f[4],
            x_bprime: f[5],
            y_bprime: f[6],
            r_c: f[7],
            r_d: f[8],
            arc_l: f[9],
            area_a: f[10],
            residual_thm1: f[11],
        }
    }

    /// Largest violation of `r_C = r_B²` and `r_D² = (1 − r_B⁴)/(1 + r_B⁴)`.
    pub fn invariant_residual(&self) -> f64 {
        let r4 = self.r_b.powi(4);
        let c = (self.r_c - self.r_b * self.r_b).abs();
        let d = (self.r_d * self.r_d - (1.0 - r4) / (1.0 + r4)).abs();
        c.max(d)
    }
}

/// `steps` rows at `α = k (π/4) / (steps − 1)`; the last row is at π/4 exactly.
pub fn sweep(steps: usize) -> Result<Vec<SweepRow>> {
    if steps < 2 {
        return Err(Error::domain(format!("sweep needs at least 2 steps, got {steps}")));
    }
    let tol = ToleranceConfig::default();
    let last = steps - 1;
    (0..steps)
        .map(|k| {
            let alpha = if k == last { FRAC_PI_4 } else { k as f64 * FRAC_PI_4 / last as f64 };
            SweepRow::at(Angle(alpha), &tol)
        })
        .collect()
}

/// CSV text: the header line, one line per row, LF endings.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 + rows.len() * 256);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.fields().iter().map(|&v| format_sig17(v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Parses text produced by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == SWEEP_HEADER => {}
        other => return Err(Error::domain(format!("unexpected sweep header {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let mut fields = [0.0; 12];
            let mut parts = line.split(',');
            for slot in fields.iter_mut() {
                let part = parts
                    .next()
                    .ok_or_else(|| Error::domain(format!("row {}: too few fields", i + 1)))?;
                *slot = part
                    .parse()
                    .map_err(|_| Error::domain(format!("row {}: bad number {part:?}", i + 1)))?;
            }
            if parts.next().is_some() {
                return Err(Error::domain(format!("row {}: too many fields", i + 1)));
            }
            Ok(SweepRow::from_fields(fields))
        })
        .collect()
}
