use super::building::{puncture, AuditProfile, BuildingSpec, ComponentSpec, CoverData, DomainTag, Polarity};
use super::report::*;
use super::*;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use Polarity::{Negative, Positive};

#[test]
fn cz_table() {
    assert_eq!(cz_index(OrbitPerturbation::MinusDelta), 1);
    assert_eq!(cz_index(OrbitPerturbation::PlusDelta), 0);
    // component contribution reduces to its positive puncture count
    let c = ComponentSpec::new(
        "u",
        DomainTag::Neck1,
        vec![puncture("a", Positive), puncture("b", Positive), puncture("c", Negative)],
        0,
    );
    assert_eq!(cz_contribution(&c), 2);
}

#[test]
fn fredholm_examples() {
    // Maslov-2 plane: one negative puncture, c1 = 1, index 1
    let plane = ComponentSpec::new("p", DomainTag::TopLevel, vec![puncture("o", Negative)], 1);
    assert_eq!(fredholm_index(&plane).unwrap(), 1);
    assert_eq!(maslov_from_chern(&plane).unwrap(), 2);
    assert_eq!(fredholm_index(&plane).unwrap(), -1 + maslov_from_chern(&plane).unwrap());

    // neck cylinder: one positive, one negative, c1 = 0, index 1
    let neck = ComponentSpec::new(
        "c",
        DomainTag::Neck1,
        vec![puncture("a", Positive), puncture("b", Negative)],
        0,
    );
    assert_eq!(fredholm_index(&neck).unwrap(), 1);
    assert!(matches!(
        maslov_from_chern(&neck),
        Err(AuditError::NotAPlane { .. })
    ));

    // top-level three-punctured sphere, all negative, c1 = 1
    let pants = ComponentSpec::new(
        "t",
        DomainTag::TopLevel,
        vec![puncture("a", Negative), puncture("b", Negative), puncture("c", Negative)],
        1,
    );
    assert_eq!(fredholm_index(&pants).unwrap(), 3);

    let empty = ComponentSpec::new("e", DomainTag::TopLevel, vec![], 0);
    assert!(matches!(
        fredholm_index(&empty),
        Err(AuditError::NoPunctures { .. })
    ));
}

#[test]
fn maslov_from_chern_signs() {
    for (c1, mu) in [(1i64, 2i64), (0, 0), (-1, -2)] {
        let p = ComponentSpec::new("p", DomainTag::TopLevel, vec![puncture("o", Negative)], c1);
        assert_eq!(maslov_from_chern(&p).unwrap(), mu);
    }
}

fn covered(d: i64, b: i64, k_u: usize, k_v: i64, c1: i64, c1_v: i64) -> ComponentSpec {
    let punctures = (0..k_u).map(|i| puncture(&alloc::format!("o{i}"), Negative)).collect();
    let mut c = ComponentSpec::new("m", DomainTag::TopLevel, punctures, c1);
    c.is_plane = false;
    c.cover = Some(CoverData {
        degree: d,
        branch_total: b,
        underlying_punctures: k_v,
        underlying_c1: c1_v,
    });
    c
}

#[test]
fn cover_checks() {
    // d=2, b=2, k_u=2, k_v=1: 2 = 4-2 and 2·1 <= 2+2
    let ok = covered(2, 2, 2, 1, 2, 1);
    let rep = cover_check(&ok).unwrap();
    assert!(rep.riemann_hurwitz_ok && rep.puncture_bound_ok && rep.chern_ok);
    assert!(rep.domination_ok);

    // parity break: 2 != 2·2 - 1
    let bad = covered(2, 1, 2, 1, 2, 1);
    assert!(matches!(cover_check(&bad), Err(AuditError::CoverInconsistent { .. })));

    // puncture bound break: 3·2 <= 1 + 4 fails
    let bad = covered(3, 4, 1, 2, 3, 1);
    assert!(matches!(cover_check(&bad), Err(AuditError::CoverInconsistent { .. })));
}

/// The golden chain: a Maslov-2 top-level plane feeding a neck cylinder
/// feeding a two-punctured bottom component, one unmatched orbit.
fn golden_building() -> BuildingSpec {
    let plane = ComponentSpec::new("u1", DomainTag::TopLevel, vec![puncture("o1", Negative)], 1);
    let neck = ComponentSpec::new(
        "u2",
        DomainTag::Neck2,
        vec![puncture("o1", Positive), puncture("o2", Negative)],
        0,
    );
    let bottom = ComponentSpec::new(
        "u3",
        DomainTag::CotangentBottom,
        vec![puncture("o2", Positive), puncture("o3", Negative)],
        0,
    );
    let mut b = BuildingSpec::new(vec![plane, neck, bottom]);
    b.limit_of_planes = true;
    b.omega = Some(core::f64::consts::PI);
    b
}

#[test]
fn golden_building_passes_with_top_level_sum_one() {
    let report = audit_building(&golden_building()).unwrap();
    assert!(report.ok(), "violations: {:?}", report.violations);
    assert_eq!(report.top_level_sum, 1);
    assert_eq!(report.n_orbits, 3);
    assert_eq!(report.n_components, 3);
    assert_eq!(report.total_index, report.closed_form_total);
    assert_eq!(report.total_index, 3);
    assert_eq!(report.lower_level_sum, report.lower_level_rhs);
    assert_eq!(report.unmatched_orbit, "o3");
    assert!(report.energy.is_some());
}

#[test]
fn golden_mutations_are_each_rejected_with_their_rule() {
    // 1. flip the neck's positive end: orbit o1 twice negative
    let mut b = golden_building();
    b.components[1].punctures[0].polarity = Negative;
    match audit_building(&b) {
        Err(AuditError::MatchingInvalid { rule, .. }) => assert_eq!(rule, "orbit-matching"),
        other => panic!("expected matching failure, got {other:?}"),
    }

    // 2. decrement the plane's Chern number: its index drops below one
    let mut b = golden_building();
    b.components[0].c1 = 0;
    let report = audit_building(&b).unwrap();
    assert!(report
        .violations
        .iter()
        .any(|v| v.rule == RULE_PLANE_AT_LEAST_ONE));

    // 3. increment it: the top-level budget breaks
    let mut b = golden_building();
    b.components[0].c1 = 2;
    let report = audit_building(&b).unwrap();
    assert!(report.violations.iter().any(|v| v.rule == RULE_TOP_BUDGET));
    assert_eq!(report.top_level_sum, 3);

    // 4. mark the two-punctured neck as a plane
    let mut b = golden_building();
    b.components[1].is_plane = true;
    match audit_building(&b) {
        Err(AuditError::MatchingInvalid { rule, .. }) => {
            assert_eq!(rule, "plane-single-puncture")
        }
        other => panic!("expected structural failure, got {other:?}"),
    }

    // 5. drop the free orbit: no unmatched end remains
    let mut b = golden_building();
    b.components[2].punctures.truncate(1);
    match audit_building(&b) {
        Err(AuditError::MatchingInvalid { rule, .. }) => {
            assert_eq!(rule, "unmatched-orbit-count")
        }
        other => panic!("expected matching failure, got {other:?}"),
    }

    // 6. attach branch-count-inconsistent cover data to the bottom
    let mut b = golden_building();
    b.components[2].cover = Some(CoverData {
        degree: 2,
        branch_total: 1,
        underlying_punctures: 1,
        underlying_c1: 0,
    });
    let report = audit_building(&b).unwrap();
    assert!(report.violations.iter().any(|v| v.rule == RULE_COVER));
}

/// Random valid building: a chain of orbits through lower-level components
/// with top-level components hanging off matched orbits.
fn random_building(rng: &mut StdRng) -> BuildingSpec {
    // lower chain: components each consuming one orbit from above (positive)
    // and emitting one or more below (negative); top-level components feed
    // the top orbits of the chains.
    let n_top = rng.random_range(1..=3usize);
    let mut components = Vec::new();
    let mut orbit_id = 0usize;
    let mut open_orbits: Vec<String> = Vec::new(); // negative ends awaiting a positive end
    for t in 0..n_top {
        let fan = rng.random_range(1..=3usize);
        let punctures = (0..fan)
            .map(|_| {
                let name = alloc::format!("o{orbit_id}");
                orbit_id += 1;
                open_orbits.push(name.clone());
                puncture(&name, Negative)
            })
            .collect::<Vec<_>>();
        let c1 = rng.random_range(0..=2i64);
        components.push(ComponentSpec::new(
            &alloc::format!("top{t}"),
            DomainTag::TopLevel,
            punctures,
            c1,
        ));
    }
    // consume open orbits with lower components until one remains
    let mut low = 0usize;
    while open_orbits.len() > 1 {
        let take = rng.random_range(1..=open_orbits.len().min(3));
        let mut punctures: Vec<_> = (0..take)
            .map(|_| puncture(&open_orbits.remove(0), Positive))
            .collect();
        let emit = rng.random_range(0..=2usize);
        for _ in 0..emit {
            let name = alloc::format!("o{orbit_id}");
            orbit_id += 1;
            open_orbits.push(name.clone());
            punctures.push(puncture(&name, Negative));
        }
        if punctures.iter().all(|p| p.polarity == Positive) && open_orbits.is_empty() {
            // keep at least the final free orbit open
            let name = alloc::format!("o{orbit_id}");
            orbit_id += 1;
            open_orbits.push(name.clone());
            punctures.push(puncture(&name, Negative));
        }
        let domain = match rng.random_range(0..3) {
            0 => DomainTag::Neck1,
            1 => DomainTag::Neck2,
            _ => DomainTag::CotangentBottom,
        };
        components.push(ComponentSpec::new(
            &alloc::format!("low{low}"),
            domain,
            punctures,
            0,
        ));
        low += 1;
    }
    BuildingSpec::new(components)
}

#[test]
fn double_entry_on_random_buildings() {
    let mut rng = StdRng::seed_from_u64(1234);
    let mut audited = 0usize;
    while audited < 10_000 {
        let b = random_building(&mut rng);
        let Ok(report) = audit_building(&b) else {
            continue;
        };
        assert_eq!(
            report.total_index, report.closed_form_total,
            "double entry broke on {b:?}"
        );
        assert_eq!(
            report.lower_level_sum, report.lower_level_rhs,
            "lower-level identity broke on {b:?}"
        );
        // plane law: every plane component satisfies ind = -1 + 2 c1
        // (report components are sorted by id, so look them up)
        for c in &b.components {
            if c.is_plane && c.punctures[0].polarity == Negative {
                let ci = report.components.iter().find(|x| x.id == c.id).unwrap();
                assert_eq!(ci.index, -1 + maslov_from_chern(c).unwrap());
            }
        }
        audited += 1;
    }
}

#[test]
fn cover_domination_is_exact_on_passing_covers() {
    let mut rng = StdRng::seed_from_u64(4321);
    let mut checked = 0;
    while checked < 2000 {
        let d = rng.random_range(2..=4i64);
        let b = 2 * d - 2;
        let k_v = rng.random_range(1..=3i64);
        let k_u = rng.random_range(1..=6usize);
        let c1_v = rng.random_range(-1..=2i64);
        let c = covered(d, b, k_u, k_v, d * c1_v, c1_v);
        if let Ok(rep) = cover_check(&c) {
            let idx = fredholm_index(&c).unwrap();
            assert!(idx >= d * rep.underlying_index);
            checked += 1;
        }
    }
}

#[test]
fn sphere_profile_allows_budget_two() {
    let mut b = golden_building();
    b.components[0].c1 = 2; // top-level sum 3 breaks even the sphere budget
    b.profile = AuditProfile::SphereLimit;
    let report = audit_building(&b).unwrap();
    assert!(report.violations.iter().any(|v| v.rule == RULE_TOP_BUDGET));

    // two index-1 planes feeding separate chains fit the sphere budget
    let p1 = ComponentSpec::new("p1", DomainTag::TopLevel, vec![puncture("a", Negative)], 1);
    let p2 = ComponentSpec::new("p2", DomainTag::TopLevel, vec![puncture("b", Negative)], 1);
    let join = ComponentSpec::new(
        "j",
        DomainTag::CotangentBottom,
        vec![
            puncture("a", Positive),
            puncture("b", Positive),
            puncture("c", Negative),
        ],
        0,
    );
    let mut b = BuildingSpec::new(vec![p1, p2, join]);
    b.profile = AuditProfile::SphereLimit;
    let report = audit_building(&b).unwrap();
    assert!(report.ok(), "violations: {:?}", report.violations);
    assert_eq!(report.top_level_sum, 2);
}

#[test]
fn neck_plane_flag_rejects_when_enabled() {
    let plane = ComponentSpec::new("p", DomainTag::Neck1, vec![puncture("o", Negative)], 1);
    let anchor = ComponentSpec::new(
        "q",
        DomainTag::CotangentBottom,
        vec![puncture("o", Positive), puncture("rho", Negative)],
        0,
    );
    let mut b = BuildingSpec::new(vec![plane, anchor]);
    assert!(audit_building(&b).is_ok());
    b.forbid_neck_planes = true;
    assert!(matches!(
        audit_building(&b),
        Err(AuditError::MatchingInvalid { .. })
    ));
}
