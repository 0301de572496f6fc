//! Gamma function for positive real arguments (Lanczos, g = 7, n = 9).

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for `x > 0`. Arguments below 1/2 are shifted up with
/// Γ(x) = Γ(x + 1) / x before the Lanczos sum is applied.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(Error::domain(format!("gamma: argument must be positive and finite, got {x}")));
    }
    let mut scale = 1.0;
    let mut z = x;
    while z < 0.5 {
        scale /= z;
        z += 1.0;
    }
    Ok(scale * lanczos(z))
}

fn lanczos(z: f64) -> f64 {
    let z = z - 1.0;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| acc + c / (z + (i + 1) as f64));
    let t = z + LANCZOS_G + 0.5;
    // split t^(z + 1/2) so it cannot overflow ahead of exp(-t)
    let half_power = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half_power * ((-t).exp() * half_power) * series
}
