//! The lemniscate constant three ways: quadrature, the AGM and Γ(1/4).

use std::f64::consts::{PI, SQRT_2};

use lemniscate::lemnifuncs::Constants;
use lemniscate::numerics::agm;

fn main() -> lemniscate::Result<()> {
    let c = Constants::get()?;
    let from_agm = PI / agm(1.0, SQRT_2)?;
    let from_gamma = c.gamma_quarter.powi(2) / (2.0 * (2.0 * PI).sqrt());
    println!("ϖ by quadrature  {:.17}", c.varpi);
    println!("ϖ by AGM         {from_agm:.17}");
    println!("ϖ by Γ(1/4)      {from_gamma:.17}");
    println!("squircle area    {:.17}  (= √2 ϖ)", c.squircle_area);
    Ok(())
}
