//! Tanh-sinh and exp-sinh quadrature on integrals with endpoint singularities
//! and infinite ranges.

use lemniscate::Error;
use lemniscate::numerics::{integrate, integrate_abscissa, Interval, ToleranceConfig};

fn main() -> lemniscate::Result<()> {
    let tol = ToleranceConfig::default();

    // ∫₀¹ dx/√(1 − x) = 2. The endpoint-aware form reads 1 − x from the
    // transformation itself instead of forming it from a rounded x.
    // The x-only form loses the tail near 1 and usually fails to converge.
    let plain = match integrate(|x| 1.0 / (1.0 - x).sqrt(), Interval::new(0.0, 1.0), &tol) {
        Ok(q) => q.value,
        Err(Error::NonConvergence { best, .. }) => {
            println!("x-only integration did not converge; keeping its best estimate");
            best
        }
        Err(e) => return Err(e),
    };
    let aware = integrate_abscissa(|a| 1.0 / a.to_hi.sqrt(), Interval::new(0.0, 1.0), &tol)?;
    println!("∫₀¹ dx/√(1−x):  x-only {:.17}  endpoint-aware {:.17}", plain, aware.value);
    println!("  errors: {:.1e} vs {:.1e}", (plain - 2.0).abs(), (aware.value - 2.0).abs());

    // ∫₀^∞ e^(−x²) dx = √π / 2
    let gauss = integrate(|x| (-x * x).exp(), Interval::to_infinity(0.0), &tol)?;
    println!(
        "∫₀^∞ e^(−x²) dx = {:.17} ({} evaluations, error {:.1e})",
        gauss.value,
        gauss.evaluations,
        (gauss.value - std::f64::consts::PI.sqrt() / 2.0).abs()
    );
    Ok(())
}
