//! Property-based checks of the quadrature and index primitives on random
//! smooth curves and lattices.

use core::f64::consts::TAU;
use proptest::prelude::*;
use torlink_core::lattice::{a2, mu_infimal, LatticeError};
use torlink_core::{
    intersection_number, liouville_integral, plane_liouville_area, rotation_number,
    winding_number, Area, H1LatticeData, Point4, Rational, SampledCurve2, SampledLoop4,
    SolidTorusModel,
};

/// Smooth star-shaped curve from a few Fourier modes, immersed by keeping
/// the modulation well below the base radius.
fn star_curve(base: f64, modes: &[(f64, f64)], n: usize) -> SampledCurve2 {
    SampledCurve2::from_fn(n, |s| {
        let th = TAU * s;
        let mut r = base;
        for (k, (a, ph)) in modes.iter().enumerate() {
            r += a * ((k as f64 + 2.0) * th + ph).sin();
        }
        [r * th.cos(), r * th.sin()]
    })
    .unwrap()
}

fn modes() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec(((-0.08f64..0.08), (0.0f64..TAU)), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn area_is_translation_invariant(ms in modes(), dx in -5.0f64..5.0, dy in -5.0f64..5.0) {
        let c = star_curve(1.0, &ms, 256);
        let a0 = plane_liouville_area(&c).unwrap();
        let a1 = plane_liouville_area(&c.translated(dx, dy)).unwrap();
        prop_assert!((a0 - a1).abs() <= 1e-10 * a0.abs().max(1.0));
    }

    #[test]
    fn reversal_negates_area_and_rotation(ms in modes()) {
        let c = star_curve(1.0, &ms, 256);
        let a = plane_liouville_area(&c).unwrap();
        let ar = plane_liouville_area(&c.reversed()).unwrap();
        prop_assert!((a + ar).abs() <= 1e-12 * a.abs().max(1.0));
        let r = rotation_number(&c).unwrap();
        let rr = rotation_number(&c.reversed()).unwrap();
        prop_assert_eq!(r, -rr);
    }

    #[test]
    fn reversal_negates_winding(ms in modes(), px in -0.4f64..0.4, py in -0.4f64..0.4) {
        let c = star_curve(1.0, &ms, 256);
        if let Ok(w) = winding_number(&c, (px, py)) {
            prop_assert_eq!(winding_number(&c.reversed(), (px, py)).unwrap(), -w);
        }
    }

    #[test]
    fn reversal_negates_liouville_and_crossings(
        ms in modes(),
        tilt in -0.3f64..0.3,
    ) {
        let loop4 = SampledLoop4::from_fn(256, |s| {
            let th = TAU * s;
            let mut r = 0.3;
            for (k, (a, ph)) in ms.iter().enumerate() {
                r += 0.5 * a * ((k as f64 + 2.0) * th + ph).sin();
            }
            Point4::new(
                1.0 + r * th.cos(),
                tilt * th.sin(),
                1.0 + r * th.sin(),
                tilt * th.cos(),
            )
        })
        .unwrap();
        let lam = liouville_integral(&loop4).unwrap();
        let lam_r = liouville_integral(&loop4.reversed()).unwrap();
        prop_assert!((lam + lam_r).abs() <= 1e-10 * lam.abs().max(1.0));

        let model = SolidTorusModel::clifford_spanning(1.0, 2).unwrap();
        if let (Ok(fwd), Ok(rev)) = (
            intersection_number(&loop4, &model),
            intersection_number(&loop4.reversed(), &model),
        ) {
            prop_assert_eq!(fwd.total, -rev.total);
            prop_assert_eq!(fwd.crossings.len(), rev.crossings.len());
        }
    }

    #[test]
    fn a2_scales_and_infimal_class_is_stable(
        m1 in -4i64..=4,
        m2 in -4i64..=4,
        w1n in -40i64..=40,
        w2n in -40i64..=40,
        den in 1i64..=12,
        kn in 1i64..=9,
        kd in 1i64..=9,
    ) {
        let lattice = H1LatticeData::new(
            [2 * m1, 2 * m2],
            [
                Area::Pi(Rational::new(w1n as i128, den as i128)),
                Area::Pi(Rational::new(w2n as i128, den as i128)),
            ],
            "prop",
        )
        .unwrap();
        let k = Rational::new(kn as i128, kd as i128);
        let scaled = lattice.scaled(k);
        match (a2(&lattice), a2(&scaled)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.mul_rational(k), b);
                match (mu_infimal(&lattice), mu_infimal(&scaled)) {
                    (Ok(c0), Ok(c1)) => prop_assert_eq!(c0, c1),
                    (Err(LatticeError::Monotone), Err(LatticeError::Monotone)) => {}
                    other => prop_assert!(false, "infimal mismatch {:?}", other),
                }
            }
            (Err(e0), Err(e1)) => prop_assert_eq!(e0, e1),
            other => prop_assert!(false, "a2 scaling mismatch {:?}", other),
        }
    }
}
