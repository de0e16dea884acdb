//! Building JSON parsing and audit-report emission.

use serde_json::Value;
use torlink_core::audit::{
    AuditProfile, AuditReport, BuildingSpec, ComponentSpec, CoverData, DomainTag, Polarity,
    Puncture,
};

use super::json::Json;
use super::{schema, SchemaError};

fn domain_from_str(s: &str) -> Result<DomainTag, SchemaError> {
    Ok(match s {
        "top_level" => DomainTag::TopLevel,
        "neck_1" => DomainTag::Neck1,
        "neck_2" => DomainTag::Neck2,
        "cotangent_bottom" => DomainTag::CotangentBottom,
        other => return schema(format!("unknown domain {other}")),
    })
}

fn domain_str(d: DomainTag) -> &'static str {
    match d {
        DomainTag::TopLevel => "top_level",
        DomainTag::Neck1 => "neck_1",
        DomainTag::Neck2 => "neck_2",
        DomainTag::CotangentBottom => "cotangent_bottom",
    }
}

pub fn building_from_json(v: &Value) -> Result<BuildingSpec, SchemaError> {
    let comps = v
        .get("components")
        .and_then(Value::as_array)
        .ok_or(SchemaError("missing components array".into()))?;
    let mut components = Vec::new();
    for (k, c) in comps.iter().enumerate() {
        let id = c
            .get("id")
            .and_then(Value::as_str)
            .ok_or(SchemaError(format!("component {k}: missing id")))?;
        let domain = domain_from_str(
            c.get("domain")
                .and_then(Value::as_str)
                .ok_or(SchemaError(format!("component {id}: missing domain")))?,
        )?;
        // only genus zero is representable; an explicit nonzero genus is a
        // schema error at parse time
        if let Some(g) = c.get("genus") {
            if g.as_i64() != Some(0) {
                return schema(format!("component {id}: only genus 0 is supported"));
            }
        }
        let mut punctures = Vec::new();
        for p in c
            .get("punctures")
            .and_then(Value::as_array)
            .ok_or(SchemaError(format!("component {id}: missing punctures")))?
        {
            let orbit = p
                .get("orbit")
                .and_then(Value::as_str)
                .ok_or(SchemaError(format!("component {id}: puncture needs orbit")))?;
            let polarity = match p.get("pol").and_then(Value::as_str) {
                Some("pos") => Polarity::Positive,
                Some("neg") => Polarity::Negative,
                _ => return schema(format!("component {id}: pol must be pos or neg")),
            };
            punctures.push(Puncture {
                orbit: orbit.to_string(),
                polarity,
            });
        }
        let c1 = c
            .get("c1")
            .and_then(Value::as_i64)
            .ok_or(SchemaError(format!("component {id}: missing c1")))?;
        let mut spec = ComponentSpec::new(id, domain, punctures, c1);
        if let Some(plane) = c.get("plane").and_then(Value::as_bool) {
            spec.is_plane = plane;
        }
        if let Some(cover) = c.get("cover") {
            let get = |name: &str| -> Result<i64, SchemaError> {
                cover
                    .get(name)
                    .and_then(Value::as_i64)
                    .ok_or(SchemaError(format!("component {id}: cover needs {name}")))
            };
            spec.cover = Some(CoverData {
                degree: get("d")?,
                branch_total: get("b")?,
                underlying_punctures: get("k_v")?,
                underlying_c1: get("c1_v")?,
            });
        }
        components.push(spec);
    }
    let mut building = BuildingSpec::new(components);
    building.limit_of_planes = v
        .get("limit_of_planes")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    if let Some(p) = v.get("profile") {
        let name = p.as_str().ok_or(SchemaError("profile must be a string".into()))?;
        building.profile = AuditProfile::parse(name)
            .ok_or(SchemaError(format!("unknown profile {name}")))?;
    }
    building.omega = v.get("omega").and_then(Value::as_f64);
    building.forbid_neck_planes = v
        .get("forbid_neck_planes")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    // an explicit matching block must agree with the one derived from the
    // puncture data
    if let Some(m) = v.get("matching").and_then(Value::as_object) {
        let derived = building
            .derive_matching()
            .map_err(|e| SchemaError(format!("matching: {e}")))?;
        for (orbit, ends) in m {
            let Some((neg, pos)) = derived.ends.get(orbit) else {
                return schema(format!("matching names unknown orbit {orbit}"));
            };
            if ends.get("neg").and_then(Value::as_str) != Some(neg.as_str()) {
                return schema(format!("matching for {orbit} disagrees on the negative end"));
            }
            let pos_given = ends.get("pos").and_then(Value::as_str);
            if pos_given != pos.as_deref() {
                return schema(format!("matching for {orbit} disagrees on the positive end"));
            }
        }
    }
    Ok(building)
}

pub fn building_to_json(b: &BuildingSpec) -> Json {
    let mut fields = vec![(
        "components",
        Json::arr(b.components.iter().map(|c| {
            let mut cf = vec![
                ("id", Json::str(&c.id)),
                ("domain", Json::str(domain_str(c.domain))),
                (
                    "punctures",
                    Json::arr(c.punctures.iter().map(|p| {
                        Json::Obj(vec![
                            ("orbit", Json::str(&p.orbit)),
                            (
                                "pol",
                                Json::str(match p.polarity {
                                    Polarity::Positive => "pos",
                                    Polarity::Negative => "neg",
                                }),
                            ),
                        ])
                    })),
                ),
                ("c1", Json::Int(c.c1)),
                ("plane", Json::Bool(c.is_plane)),
            ];
            if let Some(cover) = &c.cover {
                cf.push((
                    "cover",
                    Json::Obj(vec![
                        ("d", Json::Int(cover.degree)),
                        ("b", Json::Int(cover.branch_total)),
                        ("k_v", Json::Int(cover.underlying_punctures)),
                        ("c1_v", Json::Int(cover.underlying_c1)),
                    ]),
                ));
            }
            Json::Obj(cf)
        })),
    )];
    fields.push(("limit_of_planes", Json::Bool(b.limit_of_planes)));
    fields.push(("profile", Json::str(b.profile.as_str())));
    if let Some(w) = b.omega {
        fields.push(("omega", Json::Num(w)));
    }
    Json::Obj(fields)
}

pub fn report_to_json(report: &AuditReport) -> Json {
    Json::Obj(vec![
        ("ok", Json::Bool(report.ok())),
        ("n_components", Json::Int(report.n_components as i64)),
        ("n_orbits", Json::Int(report.n_orbits as i64)),
        ("unmatched_orbit", Json::str(&report.unmatched_orbit)),
        ("total_index", Json::Int(report.total_index)),
        ("closed_form_total", Json::Int(report.closed_form_total)),
        ("top_level_sum", Json::Int(report.top_level_sum)),
        ("top_level_budget", Json::Int(report.top_level_budget)),
        ("lower_level_sum", Json::Int(report.lower_level_sum)),
        ("lower_level_rhs", Json::Int(report.lower_level_rhs)),
        (
            "components",
            Json::arr(report.components.iter().map(|c| {
                Json::Obj(vec![
                    ("id", Json::str(&c.id)),
                    ("index", Json::Int(c.index)),
                    ("euler", Json::Int(c.euler)),
                    ("punctures", Json::Int(c.punctures as i64)),
                    ("positive_punctures", Json::Int(c.positive_punctures as i64)),
                    ("top_level", Json::Bool(c.top_level)),
                ])
            })),
        ),
        (
            "violations",
            Json::arr(report.violations.iter().map(|v| {
                Json::Obj(vec![
                    ("rule", Json::str(&v.rule)),
                    ("citation", Json::str(&v.rule)),
                    ("detail", Json::str(&v.detail)),
                    (
                        "components",
                        Json::arr(v.component_ids.iter().map(|id| Json::str(id))),
                    ),
                ])
            })),
        ),
        (
            "notes",
            Json::arr(report.notes.iter().map(|n| Json::str(n))),
        ),
        (
            "energy",
            match &report.energy {
                Some(e) => Json::Obj(vec![
                    ("alpha_max", Json::Num(e.alpha_max)),
                    ("omega_max", Json::Num(e.omega_max)),
                    ("total_max", Json::Num(e.total_max)),
                    ("coefficient", Json::Num(e.coefficient)),
                ]),
                None => Json::Null,
            },
        ),
    ])
}
