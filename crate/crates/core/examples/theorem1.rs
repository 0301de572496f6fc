//! The arc l from C to P against the squircle sector area a of OPB′, where
//! B is the lemniscate point at angle α and OC = OB²: l = 2√2 a.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use lemniscate::curves::{beta_of_alpha, lemniscate_arc_theta, squircle_sector_area, Angle};
use lemniscate::numerics::ToleranceConfig;
use lemniscate::relations::{verify_theorem1, GridSpec, DEFAULT_TOLERANCE};

fn main() -> lemniscate::Result<()> {
    let tol = ToleranceConfig::default();
    println!("{:>8} {:>8} {:>20} {:>20} {:>10}", "alpha", "beta", "l", "2√2 a", "residual");
    for k in 0..=6 {
        let alpha = Angle(FRAC_PI_4 * k as f64 / 6.0);
        let beta = beta_of_alpha(alpha)?;
        let l = lemniscate_arc_theta(Angle::ZERO, beta, &tol)?;
        let rhs = 2.0 * SQRT_2 * squircle_sector_area(alpha, &tol)?;
        println!("{:>8.5} {:>8.5} {l:>20.17} {rhs:>20.17} {:>10.1e}", alpha.0, beta.0, l - rhs);
    }
    let report = verify_theorem1(GridSpec::new(0.0, FRAC_PI_4, 257), DEFAULT_TOLERANCE)?;
    println!(
        "257-point grid: max |residual| {:.2e} at α = {:.6}, pass = {}",
        report.max_abs_residual, report.argmax, report.pass
    );
    Ok(())
}
