//! Static SVG reconstructions of the squircle/lemniscate figures.
//!
//! Geometry is computed in world coordinates first ([`FigureGeometry`]) so
//! that every vertex can be checked against its curve equation, then mapped
//! to pixels with the viewport `[−1.3, 1.3]²`, y pointing up. The shaded
//! region is the full 8-fold symmetric image of the sector OPB′.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::curves::{
    d_of_b, lemniscate_point, lemniscate_point_from_r, lemniscate_r, radial_projection_to_squircle,
    squircle_point_param, Angle, CartesianPoint,
};
use crate::error::{check_closed, Error, Result};

/// Half-width of the square world window.
pub const VIEW_EXTENT: f64 = 1.3;
/// Segments per quarter of each full curve.
const QUARTER_SEGMENTS: usize = 96;
/// Segments per bold arc and per shaded sector half.
const ARC_SEGMENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Bold arc from C to P, with `OC = OB²`.
    Fig1,
    /// Bold arc from O to D, with `OD² = (1 − OB⁴)/(1 + OB⁴)`.
    Fig3,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "fig1" => Ok(Variant::Fig1),
            "fig3" => Ok(Variant::Fig3),
            _ => Err(Error::domain(format!("unknown figure variant {s:?}; expected fig1 or fig3"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureSpec {
    pub alpha: f64,
    pub variant: Variant,
    pub width_px: u32,
    pub height_px: u32,
}

impl FigureSpec {
    pub fn new(alpha: f64, variant: Variant) -> Self {
        FigureSpec { alpha, variant, width_px: 600, height_px: 600 }
    }

    pub fn validate(&self) -> Result<Angle> {
        if self.width_px < 100 || self.height_px < 100 {
            return Err(Error::domain(format!(
                "figure dimensions must be at least 100 px, got {}x{}",
                self.width_px, self.height_px
            )));
        }
        check_closed("figure", self.alpha, 0.0, FRAC_PI_4, "[0, π/4]").map(Angle)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Label {
    pub name: &'static str,
    pub at: CartesianPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureGeometry {
    /// Closed figure-eight through the origin.
    pub lemniscate: Vec<CartesianPoint>,
    /// Closed loop.
    pub squircle: Vec<CartesianPoint>,
    /// Filled polygons, each starting and ending at the origin. Empty at α = 0.
    pub sectors: Vec<Vec<CartesianPoint>>,
    /// Bold lemniscate arcs. Empty when the arc has zero length.
    pub bold_arcs: Vec<Vec<CartesianPoint>>,
    pub labels: Vec<Label>,
}

fn reflect_x(p: CartesianPoint) -> CartesianPoint {
    CartesianPoint { x: -p.x, y: p.y }
}

fn reflect_y(p: CartesianPoint) -> CartesianPoint {
    CartesianPoint { x: p.x, y: -p.y }
}

fn rotate_quarter(p: CartesianPoint, k: usize) -> CartesianPoint {
    (0..k % 4).fold(p, |q, _| CartesianPoint { x: -q.y, y: q.x })
}

/// First-quadrant lemniscate points for radii `r_lo..=r_hi`, spaced evenly in
/// `acos r` so the samples crowd toward the vertex where the curve turns.
fn lemniscate_by_radius(r_lo: f64, r_hi: f64, n: usize) -> Result<Vec<CartesianPoint>> {
    let (a, b) = (r_hi.acos(), r_lo.acos());
    (0..=n)
        .map(|k| {
            let r = if k == 0 { r_hi } else if k == n { r_lo } else { (a + (b - a) * k as f64 / n as f64).cos() };
            lemniscate_point_from_r(r)
        })
        .collect()
}

pub fn figure_geometry(spec: &FigureSpec) -> Result<FigureGeometry> {
    let alpha = spec.validate()?;

    // quadrant I runs from P = (1, 0) to O
    let q1 = lemniscate_by_radius(0.0, 1.0, QUARTER_SEGMENTS)?;
    let mut lemniscate: Vec<CartesianPoint> = q1.iter().rev().copied().collect(); // O → P
    lemniscate.extend(q1.iter().skip(1).map(|&p| reflect_y(p))); // P → O below
    lemniscate.extend(q1.iter().rev().skip(1).map(|&p| reflect_x(p))); // O → −P above
    lemniscate.extend(q1.iter().skip(1).map(|&p| reflect_x(reflect_y(p)))); // −P → O below

    let quarter: Vec<CartesianPoint> = (0..QUARTER_SEGMENTS)
        .map(|k| squircle_point_param(Angle(FRAC_PI_2 * k as f64 / QUARTER_SEGMENTS as f64)))
        .collect::<Result<_>>()?;
    let mut squircle: Vec<CartesianPoint> =
        (0..4).flat_map(|k| quarter.iter().map(move |&p| rotate_quarter(p, k))).collect();
    squircle.push(squircle[0]);

    let mut sectors = Vec::new();
    if alpha.0 > 0.0 {
        let upper: Vec<CartesianPoint> = (0..=ARC_SEGMENTS)
            .map(|k| {
                let t = if k == ARC_SEGMENTS { alpha.0 } else { alpha.0 * k as f64 / ARC_SEGMENTS as f64 };
                radial_projection_to_squircle(Angle(t))
            })
            .collect::<Result<_>>()?;
        // O, then the rim from angle −α up to α, then back to O
        let mut base = vec![CartesianPoint::ORIGIN];
        base.extend(upper.iter().rev().take(ARC_SEGMENTS).map(|&p| reflect_y(p)));
        base.extend(upper.iter().copied());
        base.push(CartesianPoint::ORIGIN);
        sectors = (0..4).map(|k| base.iter().map(|&p| rotate_quarter(p, k)).collect()).collect();
    }

    let r_b = lemniscate_r(alpha)?;
    let mut bold_arcs = Vec::new();
    let end = match spec.variant {
        Variant::Fig1 => {
            let r_c = r_b * r_b;
            if r_c < 1.0 {
                // C′ → P → C in each lobe
                let p_to_c = lemniscate_by_radius(r_c, 1.0, ARC_SEGMENTS)?;
                let mut lobe: Vec<CartesianPoint> = p_to_c.iter().rev().map(|&p| reflect_y(p)).collect();
                lobe.extend(p_to_c.iter().skip(1).copied());
                let mirrored = lobe.iter().map(|&p| reflect_x(p)).collect();
                bold_arcs.push(lobe);
                bold_arcs.push(mirrored);
            }
            ("C", lemniscate_point_from_r(r_c)?)
        }
        Variant::Fig3 => {
            let r_d = d_of_b(r_b)?;
            if r_d > 0.0 {
                let mut o_to_d = lemniscate_by_radius(0.0, r_d, ARC_SEGMENTS)?;
                o_to_d.reverse();
                bold_arcs.push(o_to_d.clone());
                bold_arcs.push(o_to_d.iter().map(|&p| reflect_y(p)).collect());
                bold_arcs.push(o_to_d.iter().map(|&p| reflect_x(p)).collect());
                bold_arcs.push(o_to_d.iter().map(|&p| reflect_x(reflect_y(p))).collect());
            }
            ("D", lemniscate_point_from_r(r_d)?)
        }
    };

    let labels = vec![
        Label { name: "O", at: CartesianPoint::ORIGIN },
        Label { name: "P", at: CartesianPoint { x: 1.0, y: 0.0 } },
        Label { name: "B", at: lemniscate_point(alpha)? },
        Label { name: "B′", at: radial_projection_to_squircle(alpha)? },
        Label { name: end.0, at: end.1 },
    ];

    Ok(FigureGeometry { lemniscate, squircle, sectors, bold_arcs, labels })
}

struct Viewport {
    width: f64,
    height: f64,
}

impl Viewport {
    fn map(&self, p: CartesianPoint) -> (f64, f64) {
        let span = 2.0 * VIEW_EXTENT;
        (
            (p.x + VIEW_EXTENT) / span * self.width,
            (VIEW_EXTENT - p.y) / span * self.height,
        )
    }

    fn points(&self, pts: &[CartesianPoint]) -> String {
        let mut out = String::with_capacity(pts.len() * 18);
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x:.3},{y:.3}");
        }
        out
    }
}

/// SVG 1.1 document for `spec`.
pub fn render_svg(spec: &FigureSpec) -> Result<String> {
    let g = figure_geometry(spec)?;
    let view = Viewport { width: spec.width_px as f64, height: spec.height_px as f64 };
    let (w, h) = (spec.width_px, spec.height_px);
    let stroke = (w.min(h) as f64 / 400.0).max(1.0);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let variant = match spec.variant {
        Variant::Fig1 => "fig1",
        Variant::Fig3 => "fig3",
    };
    let _ = writeln!(s, "<title>Squircle and lemniscate, {variant}, alpha = {}</title>", super::format_sig17(spec.alpha));
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);

    let _ = writeln!(s, r##"<g id="sectors" fill="#9ecae1" stroke="none">"##);
    for sector in &g.sectors {
        let _ = writeln!(s, r#"<polygon points="{}"/>"#, view.points(sector));
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r##"<polyline id="squircle" fill="none" stroke="#3182bd" stroke-width="{stroke:.2}" points="{}"/>"##,
        view.points(&g.squircle)
    );
    let _ = writeln!(
        s,
        r##"<polyline id="lemniscate" fill="none" stroke="#636363" stroke-width="{stroke:.2}" points="{}"/>"##,
        view.points(&g.lemniscate)
    );

    let _ = writeln!(
        s,
        r##"<g id="bold-arcs" fill="none" stroke="#de2d26" stroke-width="{:.2}" stroke-linecap="round">"##,
        3.0 * stroke
    );
    for arc in &g.bold_arcs {
        let _ = writeln!(s, r#"<polyline points="{}"/>"#, view.points(arc));
    }
    let _ = writeln!(s, "</g>");

    let font = (w.min(h) as f64 / 30.0).max(10.0);
    let _ = writeln!(s, r#"<g id="points" font-family="serif" font-size="{font:.1}">"#);
    for label in &g.labels {
        let (x, y) = view.map(label.at);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.2}"/>"#, 1.5 * stroke);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}">{}</text>"#, x + 0.4 * font, y - 0.3 * font, label.name);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    Ok(s)
}
