use std::f64::consts::{FRAC_PI_4, SQRT_2};

use proptest::prelude::*;

use lemniscate::cli::{figure_geometry, format_sig17, FigureSpec, SweepRow, Variant};
use lemniscate::curves::{
    beta_of_alpha, hyperbolic_integral, lemniscate_arc_radial, squircle_r2_cos, squircle_r2_tan,
    squircle_sector_area, squircle_sector_area_tan, Angle,
};
use lemniscate::lemnifuncs::{
    cl, cl_duplication, extend_cl, extend_sl, sl, slh, slh_limit, squig_point, tan4, varpi,
};
use lemniscate::numerics::{agm, gamma, integrate, Interval, ToleranceConfig};
use lemniscate::relations::{verify_selected, GridSpec, Identity, Perturbation};
use lemniscate::cli::verify_exit_code;

const VARPI: f64 = 2.622_057_554_292_119_8;
const LIMIT: f64 = 1.854_074_677_301_371_9; // ϖ/√2

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pythagorean(u in 0.0..=VARPI / 2.0) {
        let (s, c) = (sl(u).unwrap(), cl(u).unwrap());
        prop_assert!((c * c + s * s + c * c * s * s - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn sl_round_trip(u in 0.0..VARPI / 2.0 - 1e-3) {
        let back = lemniscate_arc_radial(0.0, sl(u).unwrap(), &tol()).unwrap();
        prop_assert!((back - u).abs() <= 1e-11, "{back} vs {u}");
    }

    #[test]
    fn slh_round_trip(t in 0.0..LIMIT - 1e-2) {
        let back = hyperbolic_integral(slh(t).unwrap(), &tol()).unwrap();
        prop_assert!((back - t).abs() <= 1e-11);
    }

    #[test]
    fn squircle_membership(t in 0.0..=LIMIT) {
        let p = squig_point(t).unwrap();
        prop_assert!(p.x >= 0.0 && p.y >= 0.0);
        prop_assert!((p.x.powi(4) + p.y.powi(4) - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn monotone(a in 0.0..VARPI / 2.0, b in 0.0..VARPI / 2.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi - lo > 1e-9);
        prop_assert!(sl(lo).unwrap() < sl(hi).unwrap());
        prop_assert!(cl(lo).unwrap() > cl(hi).unwrap());
        let (tl, th) = (lo * SQRT_2 * 0.99, hi * SQRT_2 * 0.99);
        prop_assert!(slh(tl).unwrap() < slh(th).unwrap());
    }

    #[test]
    fn area_round_trip(t in 0.0..=LIMIT / 2.0) {
        let alpha = Angle(tan4(t).unwrap().atan());
        let a = squircle_sector_area(alpha, &tol()).unwrap();
        prop_assert!((2.0 * a - t).abs() <= 1e-10);
    }

    #[test]
    fn duplication(u in prop_oneof![0.0..VARPI / 4.0 - 0.01, VARPI / 4.0 + 0.01..VARPI / 2.0 - 0.01]) {
        prop_assert!((cl_duplication(u).unwrap() - extend_cl(2.0 * u).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn extension_symmetries(u in -20.0..20.0f64) {
        let s = extend_sl(u).unwrap();
        prop_assert!((extend_sl(-u).unwrap() + s).abs() <= 1e-12);
        prop_assert!((extend_sl(u + 2.0 * VARPI).unwrap() - s).abs() <= 1e-11);
        prop_assert!((extend_sl(VARPI - u).unwrap() - s).abs() <= 1e-11);
        prop_assert!(s.abs() <= 1.0);
    }

    #[test]
    fn squircle_polar_forms_agree(theta in 0.0..std::f64::consts::FRAC_PI_2 - 1e-6) {
        let a = squircle_r2_tan(Angle(theta)).unwrap();
        let b = squircle_r2_cos(Angle(theta));
        prop_assert!((a - b).abs() <= 1e-13);
    }

    #[test]
    fn sector_area_forms_agree(alpha in 0.0..=std::f64::consts::FRAC_PI_2) {
        let a = squircle_sector_area(Angle(alpha), &tol()).unwrap();
        let b = squircle_sector_area_tan(Angle(alpha), &tol()).unwrap();
        prop_assert!((a - b).abs() <= 2e-12);
    }

    #[test]
    fn theorem1_pointwise(alpha in 0.0..=FRAC_PI_4) {
        let row = SweepRow::at(Angle(alpha), &tol()).unwrap();
        prop_assert!(row.residual_thm1.abs() <= 1e-9);
        prop_assert!(row.invariant_residual() <= 1e-13);
        prop_assert!((row.beta - beta_of_alpha(Angle(alpha)).unwrap().0).abs() == 0.0);
    }

    #[test]
    fn figure_vertices_on_curves(alpha in 0.0..=FRAC_PI_4, fig3 in any::<bool>()) {
        let variant = if fig3 { Variant::Fig3 } else { Variant::Fig1 };
        let g = figure_geometry(&FigureSpec::new(alpha, variant)).unwrap();
        for p in g.lemniscate.iter().chain(g.bold_arcs.iter().flatten()) {
            prop_assert!(p.lemniscate_residual().abs() <= 1e-10);
        }
        for p in &g.squircle {
            prop_assert!(p.squircle_residual().abs() <= 1e-10);
        }
        for s in &g.sectors {
            for p in &s[1..s.len() - 1] {
                prop_assert!(p.squircle_residual().abs() <= 1e-10);
            }
        }
        for l in &g.labels {
            match l.name {
                "B" | "C" | "D" => prop_assert!(l.at.lemniscate_residual().abs() <= 1e-10),
                "B′" => prop_assert!(l.at.squircle_residual().abs() <= 1e-10),
                _ => {}
            }
        }
    }

    #[test]
    fn sig17_round_trips(bits in any::<u64>()) {
        let x = f64::from_bits(bits);
        prop_assume!(x.is_finite());
        let back: f64 = format_sig17(x).parse().unwrap();
        prop_assert!(back == x);
    }

    #[test]
    fn grid_points(lo in -10.0..10.0f64, width in 1e-3..10.0f64, n in 2usize..300) {
        let g = GridSpec::new(lo, lo + width, n).with_inset(width * 1e-4);
        let p = g.points().unwrap();
        prop_assert_eq!(p.len(), n);
        prop_assert!(p[0] == lo + g.endpoint_inset);
        prop_assert!(p[n - 1] == lo + width - g.endpoint_inset);
        prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn quadrature_linearity(a in -3.0..3.0f64, b in -3.0..3.0f64, lo in -2.0..0.0f64, hi in 0.0..2.0f64) {
        let range = Interval::new(lo, hi);
        let f = |x: f64| (x * x + 1.0).sqrt();
        let g = |x: f64| x.cos();
        let lhs = integrate(|x| a * f(x) + b * g(x), range, &tol()).unwrap().value;
        let rhs = a * integrate(f, range, &tol()).unwrap().value + b * integrate(g, range, &tol()).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-11);
    }

    #[test]
    fn agm_symmetric_homogeneous(a in 0.1..10.0f64, b in 0.1..10.0f64, k in 0.1..10.0f64) {
        let m = agm(a, b).unwrap();
        prop_assert!((agm(b, a).unwrap() - m).abs() <= 1e-14 * m);
        prop_assert!((agm(k * a, k * b).unwrap() - k * m).abs() <= 1e-13 * k * m);
        prop_assert!(a.min(b) <= m && m <= a.max(b));
    }

    #[test]
    fn gamma_recurrence(x in 0.05..30.0f64) {
        let lhs = gamma(x + 1.0).unwrap();
        prop_assert!((lhs - x * gamma(x).unwrap()).abs() <= 1e-12 * lhs.abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn forced_failure_maps_to_exit_one(pick in 0usize..12, offset in 1e-6..1e-3f64, n in 3usize..20) {
        let ids = Identity::ALL;
        let target = ids[pick];
        let clean = verify_selected(&ids, Some(n), 1e-9, None).unwrap();
        prop_assert_eq!(verify_exit_code(&clean), 0);
        let p = Perturbation { target, offset };
        let bad = verify_selected(&ids, Some(n), 1e-9, Some(p)).unwrap();
        prop_assert_eq!(verify_exit_code(&bad), 1);
        for (r, id) in bad.iter().zip(ids) {
            prop_assert_eq!(r.pass, id != target);
        }
    }

    #[test]
    fn reports_are_deterministic(pick in 0usize..12, n in 3usize..40) {
        let id = Identity::ALL[pick];
        let grid = id.default_grid().unwrap().map(|g| g.with_n(n));
        let a = id.verify(grid, 1e-9).unwrap();
        let b = id.verify(grid, 1e-9).unwrap();
        prop_assert_eq!(a.max_abs_residual.to_bits(), b.max_abs_residual.to_bits());
        prop_assert_eq!(a.argmax.to_bits(), b.argmax.to_bits());
        if let Some(g) = grid {
            prop_assert!(g.points().unwrap().contains(&a.argmax));
            // the trivial configuration: the first grid point, except for
            // theorem 2 where D reaches O at R = 1
            let pts = g.points().unwrap();
            let trivial = if id == Identity::Theorem2 { pts[n - 1] } else { pts[0] };
            prop_assert!(id.residual(trivial).unwrap().abs() <= 1e-12);
        }
    }
}

#[test]
fn constants_agree_with_oracles() {
    let w = varpi().unwrap();
    assert!((w - std::f64::consts::PI / agm(1.0, SQRT_2).unwrap()).abs() <= 1e-11);
    assert!((slh_limit().unwrap() - w / SQRT_2).abs() <= 1e-12);
}
