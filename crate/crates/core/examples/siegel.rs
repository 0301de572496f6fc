//! The substitution R = √2 T / √(1 + T⁴) carries the hyperbolic integral onto
//! the lemniscate arc: ∫₀^R dr/√(1 − r⁴) = √2 ∫₀^T dt/√(1 + t⁴).

use lemniscate::relations::{verify_final_remark, verify_siegel, verify_theorem2, GridSpec, Identity};

fn main() -> lemniscate::Result<()> {
    for t in [0.1, 0.5, 0.9, 1.0] {
        println!("T = {t:<4}  residual {:+.2e}", Identity::Siegel.residual(t)?);
    }
    let grid = GridSpec::new(0.0, 1.0, 257);
    for r in [verify_siegel(grid, 1e-9)?, verify_theorem2(grid, 1e-9)?, verify_final_remark(grid, 1e-9)?] {
        println!("{:<13} max |residual| {:.2e} at {:.6}  pass = {}", r.name, r.max_abs_residual, r.argmax, r.pass);
    }
    Ok(())
}
