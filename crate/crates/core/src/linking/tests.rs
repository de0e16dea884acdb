use super::*;
use crate::geom::{Point4, SampledLoop4, SolidTorusModel};
use crate::movie::{close_up, CloseUpParams, LinkedCylinderParams};
use core::f64::consts::TAU;

fn planar_cylinder(r: f64) -> SolidTorusModel {
    SolidTorusModel::planar_disk_cylinder(0.0, 0.0, r).unwrap()
}

#[test]
fn base_track_of_linked_cylinder_crosses_once() {
    let p = LinkedCylinderParams::new(1.0, 0.5).unwrap();
    let movie = crate::movie::linked_cylinder_movie(&p).unwrap();
    let (surf, _) = crate::movie::lift_with_report(&movie).unwrap();
    // the curve t -> φ(0, t), closed far away to make a loop: run out and
    // return along a big detour at x1 = 3D that never meets the cylinder
    let (_, nt) = surf.dims();
    let mut pts: alloc::vec::Vec<Point4> = (0..nt).map(|j| surf.point(0, j)).collect();
    let top = *pts.last().unwrap();
    let detour_x = 3.0 * p.d;
    for k in 1..=16 {
        let u = k as f64 / 16.0;
        pts.push(Point4::new(
            top.x1 + (detour_x - top.x1) * u,
            top.y1,
            top.x2,
            top.y2,
        ));
    }
    let (bottom, top_y2) = (pts[0], top.y2);
    for k in 1..=16 {
        let u = k as f64 / 16.0;
        pts.push(Point4::new(detour_x, top.y1, top.x2, top_y2 + (bottom.y2 - top_y2) * u));
    }
    for k in 1..16 {
        let u = k as f64 / 16.0;
        pts.push(Point4::new(
            detour_x + (bottom.x1 - detour_x) * u,
            bottom.y1,
            bottom.x2,
            bottom.y2,
        ));
    }
    let loop4 = SampledLoop4::new(pts).unwrap();
    let count = intersection_number(&loop4, &planar_cylinder(1.0)).unwrap();
    assert_eq!(count.crossings.len(), 1);
    assert_eq!(count.total.abs(), 1);
}

#[test]
fn loop_outside_the_disk_never_crosses() {
    // circle in the (x1, x2) plane around (2.5, 0): x1 stays >= 1.5 > r
    let loop4 = SampledLoop4::from_fn(64, |s| {
        Point4::new(2.5 + libm::cos(TAU * s), 0.0, libm::sin(TAU * s), 0.0)
    })
    .unwrap();
    let count = intersection_number(&loop4, &planar_cylinder(1.0)).unwrap();
    assert_eq!(count.total, 0);
    assert!(count.crossings.is_empty());
}

#[test]
fn vertical_circle_inside_the_disk_cancels() {
    // small loop through the disk region crossing x2 = 0 twice, oppositely
    let loop4 = SampledLoop4::from_fn(64, |s| {
        Point4::new(0.25, 0.0, libm::sin(TAU * s), libm::cos(TAU * s))
    })
    .unwrap();
    let count = intersection_number(&loop4, &planar_cylinder(1.0)).unwrap();
    assert_eq!(count.crossings.len(), 2);
    assert_eq!(count.total, 0);
    assert_eq!(
        count.crossings.iter().map(|c| c.sign).sum::<i64>(),
        0
    );
}

#[test]
fn clifford_meridian_loop_generates_the_pairing() {
    // small loop around the torus point (r, 0, r, 0) in the radial 2-plane:
    // it meets {|z2| = r, |z1| < r} exactly once
    let r = 1.0;
    let eps = 0.2;
    let loop4 = SampledLoop4::from_fn(128, |s| {
        let th = TAU * s;
        Point4::new(r + eps * libm::cos(th), 0.0, r + eps * libm::sin(th), 0.0)
    })
    .unwrap();
    let spanning = SpanningModel::clifford(r);
    let class = pi1_class(&loop4, &spanning).unwrap();
    assert_eq!(class.abs(), 1);
}

#[test]
fn core_circle_of_second_factor_has_class_zero() {
    // the loop (0, 0, s cos, s sin) with s < r never satisfies membership
    // |z2| = r, so its class vanishes
    let spanning = SpanningModel::clifford(1.0);
    let loop4 = SampledLoop4::from_fn(64, |s| {
        Point4::new(0.0, 0.0, 0.5 * libm::cos(TAU * s), 0.5 * libm::sin(TAU * s))
    })
    .unwrap();
    assert_eq!(pi1_class(&loop4, &spanning).unwrap(), 0);
}

#[test]
fn class_is_orientation_antisymmetric_and_additive() {
    let r = 1.0;
    let eps = 0.2;
    let base = |s: f64| -> Point4 {
        let th = TAU * s;
        Point4::new(r + eps * libm::cos(th), 0.0, r + eps * libm::sin(th), 0.0)
    };
    let loop4 = SampledLoop4::from_fn(128, base).unwrap();
    let spanning = SpanningModel::clifford(r);
    let c = pi1_class(&loop4, &spanning).unwrap();
    assert_eq!(pi1_class(&loop4.reversed(), &spanning).unwrap(), -c);
    // concatenation doubles the class: traverse the circle twice
    let doubled = SampledLoop4::from_fn(256, |s| base(2.0 * s % 1.0)).unwrap();
    assert_eq!(pi1_class(&doubled, &spanning).unwrap(), 2 * c);
}

#[test]
fn perturbation_at_desk_scale_preserves_totals() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let r = 1.0;
    let eps = 0.2;
    let spanning = SpanningModel::clifford(r);
    let mut rng = StdRng::seed_from_u64(5);
    let base = SampledLoop4::from_fn(128, |s| {
        let th = TAU * s;
        Point4::new(r + eps * libm::cos(th), 0.0, r + eps * libm::sin(th), 0.0)
    })
    .unwrap();
    let c0 = pi1_class(&base, &spanning).unwrap();
    // distance of the loop to the crossing set is on the order of eps; keep
    // perturbations a tenth of it
    for _ in 0..20 {
        let amp = 0.1 * eps * rng.random_range(0.2..1.0);
        let (k, phase) = (rng.random_range(1..4) as f64, rng.random_range(0.0..TAU));
        let perturbed = SampledLoop4::from_fn(128, |s| {
            let th = TAU * s;
            let w = amp * libm::sin(k * th + phase);
            Point4::new(
                r + eps * libm::cos(th) + w,
                0.3 * w,
                r + eps * libm::sin(th) - 0.5 * w,
                0.2 * w,
            )
        })
        .unwrap();
        assert_eq!(pi1_class(&perturbed, &spanning).unwrap(), c0);
    }
}

#[test]
fn totals_stable_under_resolution_doubling() {
    let r = 1.0;
    let eps = 0.2;
    let spanning = SpanningModel::clifford(r);
    let mk = |n: usize| {
        SampledLoop4::from_fn(n, |s| {
            let th = TAU * s;
            Point4::new(r + eps * libm::cos(th), 0.0, r + eps * libm::sin(th), 0.0)
        })
        .unwrap()
    };
    assert_eq!(
        pi1_class(&mk(128), &spanning).unwrap(),
        pi1_class(&mk(256), &spanning).unwrap()
    );
}

#[test]
fn nontransversal_contact_is_rejected() {
    // loop tangent to x2 = 0 from above inside the disk
    let loop4 = SampledLoop4::from_fn(64, |s| {
        let th = TAU * s;
        Point4::new(0.2 * libm::cos(th), 0.2 * libm::sin(th), 0.0, libm::sin(th))
    })
    .unwrap();
    let e = intersection_number(&loop4, &planar_cylinder(1.0)).unwrap_err();
    assert!(matches!(e, LinkError::NonTransversalCrossing { .. }));
}

#[test]
fn far_separated_clifford_pairs_are_unlinked() {
    let r = 1.0;
    let spanning = SpanningModel::clifford(r);
    // meridian and longitude basis loops of a far-translated second torus
    let offset = 10.0 * 2.0 * r;
    let meridian = SampledLoop4::from_fn(64, |s| {
        let th = TAU * s;
        Point4::new(
            offset + r * libm::cos(th),
            r * libm::sin(th),
            offset + r,
            0.0,
        )
    })
    .unwrap();
    let longitude = SampledLoop4::from_fn(64, |s| {
        let th = TAU * s;
        Point4::new(
            offset + r,
            0.0,
            offset + r * libm::cos(th),
            r * libm::sin(th),
        )
    })
    .unwrap();
    let cert = homological_linking_certificate(&spanning, &[meridian, longitude]).unwrap();
    assert!(!cert.linked);
    assert_eq!(cert.classes, alloc::vec![0, 0]);
}

#[test]
fn small_torus_around_a_complement_generator_is_linked() {
    // circle-bundle torus around the complement generator of the product
    // torus: longitude class 1, meridian class 0
    let r = 1.0;
    let eps = 0.2;
    let spanning = SpanningModel::clifford(r);
    let gamma = |s: f64| -> Point4 {
        let th = TAU * s;
        Point4::new(r + eps * libm::cos(th), 0.0, r + eps * libm::sin(th), 0.0)
    };
    let longitude = SampledLoop4::from_fn(128, gamma).unwrap();
    // meridian of the small torus: a tiny circle transverse to gamma at s=0
    let tiny = 0.02;
    let meridian = SampledLoop4::from_fn(64, |s| {
        let th = TAU * s;
        let p = gamma(0.0);
        Point4::new(p.x1, p.y1 + tiny * libm::cos(th), p.x2, p.y2 + tiny * libm::sin(th))
    })
    .unwrap();
    let cert = homological_linking_certificate(&spanning, &[meridian, longitude]).unwrap();
    assert!(cert.linked);
    assert_eq!(cert.classes[0], 0);
    assert_eq!(cert.classes[1].abs(), 1);
    assert_eq!(cert.witness.map(|(i, _)| i), Some(1));
}

#[test]
fn closed_up_pair_certificate_matches_the_construction() {
    use crate::movie::close_up_standard_cylinder;
    let cyl = LinkedCylinderParams::new(1.0, 0.5)
        .unwrap()
        .with_resolution(128, 128);
    let cu = CloseUpParams::new(10.0, cyl.t_extent + 5.0).with_resolution(128, 128);
    let l2 = close_up(&cyl, &cu).unwrap();
    // L1 closes up the standard cylinder C(0,0;r1) far outside L2's extent
    let delta1 = cu.delta + 2.0 * cyl.t_extent;
    let l1 =
        close_up_standard_cylinder((0.0, 0.0), 1.0, &CloseUpParams::new(10.0, delta1).with_resolution(128, 128))
            .unwrap();
    let spanning = SpanningModel::closed_up(&l1).unwrap();
    let cert =
        homological_linking_certificate(&spanning, &[l2.sigma.clone(), l2.tau.clone()]).unwrap();
    assert!(cert.linked);
    let (idx, class) = cert.witness.unwrap();
    assert_eq!(idx, 1, "the longitude is the witness");
    assert_eq!(class.abs(), 1);
    assert_eq!(cert.classes[0], 0, "the meridian bounds away from L1");
}
