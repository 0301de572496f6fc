//! Numerical substrate: double-exponential quadrature, safeguarded
//! root-finding, the arithmetic-geometric mean and the gamma function.

mod gamma;
mod quadrature;
mod roots;

pub use gamma::gamma;
pub use quadrature::{
    integrate, integrate_abscissa, Abscissa, Interval, QuadratureResult, ToleranceConfig,
    MAX_LEVELS,
};
pub use roots::{solve_monotone, solve_monotone_newton, RootResult, MAX_ITERATIONS};

use crate::error::{Error, Result};

/// Arithmetic-geometric mean of two positive numbers.
///
/// Iterates `(a, b) -> ((a + b) / 2, sqrt(a b))` until the two means agree to
/// a few ulps.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!("agm: arguments must be positive and finite, got ({a}, {b})")));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a.max(b) {
            return Ok(0.5 * (a + b));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    // Quadratic convergence makes this unreachable for finite positive input.
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    #[test]
    fn agm_fixed_point() {
        assert_eq!(agm(1.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn agm_one_sqrt2() {
        // mpmath, 40 digits: 1.198140234735592207439922492280323878227
        let m = agm(1.0, SQRT_2).unwrap();
        assert!((m - 1.198_140_234_735_592_2).abs() < 1e-15);
        assert!((PI / m - 2.622_057_554_292_119_8).abs() < 1e-15);
    }

    #[test]
    fn agm_homogeneous() {
        let lhs = agm(2.0, 8.0).unwrap();
        let rhs = 2.0 * agm(1.0, 4.0).unwrap();
        assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * rhs);
        assert_eq!(agm(3.0, 5.0).unwrap(), agm(5.0, 3.0).unwrap());
    }

    #[test]
    fn agm_rejects_nonpositive() {
        assert!(matches!(agm(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(agm(1.0, -2.0), Err(Error::Domain(_))));
        assert!(matches!(agm(f64::NAN, 1.0), Err(Error::Domain(_))));
    }
}
