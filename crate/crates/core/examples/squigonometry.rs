//! cos₄ and sin₄ trace the squircle x⁴ + y⁴ = 1 with twice the swept area as
//! parameter; tan₄ coincides with the hyperbolic lemniscate sine.

use lemniscate::curves::{squircle_sector_area, Angle};
use lemniscate::lemnifuncs::{slh, slh_limit, squig_point, tan4};
use lemniscate::numerics::ToleranceConfig;

fn main() -> lemniscate::Result<()> {
    let limit = slh_limit()?;
    let tol = ToleranceConfig::default();
    println!("{:>8} {:>20} {:>20} {:>10} {:>10}", "t", "cos4", "sin4", "x⁴+y⁴−1", "2a − t");
    for k in 0..=8 {
        let t = limit * k as f64 / 8.0;
        let p = squig_point(t)?;
        let area = squircle_sector_area(Angle(p.y.atan2(p.x)), &tol)?;
        println!(
            "{t:>8.5} {:>20.17} {:>20.17} {:>10.1e} {:>10.1e}",
            p.x,
            p.y,
            p.x.powi(4) + p.y.powi(4) - 1.0,
            2.0 * area - t
        );
    }
    for t in [0.25, 0.5, 1.0, 1.5] {
        println!("tan4({t}) = {:.17}   slh({t}) = {:.17}", tan4(t)?, slh(t)?);
    }
    Ok(())
}
