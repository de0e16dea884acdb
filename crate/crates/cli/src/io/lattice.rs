//! Torus descriptor, verdict, and capacity JSON.

use serde_json::Value;
use torlink_core::lattice::{
    a2, monotonicity, Admissibility, EmbeddingObstruction, TorusDescriptor, TorusKind, Verdict,
};
use torlink_core::{Area, H1LatticeData, Rational};

use super::json::Json;
use super::{schema, SchemaError};

pub fn area_to_json(area: &Area) -> Json {
    match area {
        Area::Pi(q) => Json::Obj(vec![(
            "rational",
            Json::arr([
                Json::Int(q.numerator() as i64),
                Json::Int(q.denominator() as i64),
                Json::str("pi"),
            ]),
        )]),
        Area::Real(x) => Json::Obj(vec![("real", Json::Num(*x))]),
    }
}

pub fn area_from_json(v: &Value) -> Result<Area, SchemaError> {
    if let Some(r) = v.get("rational") {
        let parts = r
            .as_array()
            .ok_or(SchemaError("rational must be [num, den, \"pi\"]".into()))?;
        if parts.len() != 3 || parts[2].as_str() != Some("pi") {
            return schema("rational must be [num, den, \"pi\"]");
        }
        let num = parts[0].as_i64().ok_or(SchemaError("numerator".into()))?;
        let den = parts[1].as_i64().ok_or(SchemaError("denominator".into()))?;
        if den == 0 {
            return schema("zero denominator");
        }
        return Ok(Area::Pi(Rational::new(num as i128, den as i128)));
    }
    if let Some(x) = v.get("real") {
        return Ok(Area::Real(
            x.as_f64().ok_or(SchemaError("real must be a number".into()))?,
        ));
    }
    schema("area must be {\"rational\": ...} or {\"real\": ...}")
}

/// Pretty form used in summaries: "pi", "(3/25) pi", or the 12-digit real.
pub fn area_pretty(area: &Area) -> String {
    match area {
        Area::Pi(_) => format!("{area}"),
        Area::Real(x) => super::fmt_f64(*x),
    }
}

fn kind_str(kind: TorusKind) -> &'static str {
    match kind {
        TorusKind::Clifford => "clifford",
        TorusKind::Chekanov => "chekanov",
        TorusKind::Product => "product",
        TorusKind::CloseUp => "close_up",
        TorusKind::Custom => "custom",
    }
}

fn kind_from_str(s: &str) -> Result<TorusKind, SchemaError> {
    Ok(match s {
        "clifford" => TorusKind::Clifford,
        "chekanov" => TorusKind::Chekanov,
        "product" => TorusKind::Product,
        "close_up" => TorusKind::CloseUp,
        "custom" => TorusKind::Custom,
        other => return schema(format!("unknown torus kind {other}")),
    })
}

pub fn descriptor_to_json(d: &TorusDescriptor) -> Json {
    let mu = d.lattice.mu();
    let omega = d.lattice.omega();
    let mut fields = vec![
        (
            "mu",
            Json::arr([Json::Int(mu[0]), Json::Int(mu[1])]),
        ),
        (
            "omega",
            Json::arr([area_to_json(&omega[0]), area_to_json(&omega[1])]),
        ),
        ("kind", Json::str(kind_str(d.kind))),
        (
            "enumerative",
            Json::DynObj(
                d.enumerative
                    .iter()
                    .map(|(&(a, b), &v)| (format!("{a},{b}"), Json::Int(v as i64)))
                    .collect(),
            ),
        ),
        ("admissible", Json::Bool(d.admissible.admissible)),
        ("admissible_reason", Json::str(&d.admissible.reason)),
        ("provenance", Json::str(&d.lattice.provenance)),
    ];
    if let Some(g) = d.pi1_image_generator {
        fields.push(("pi1_image", Json::Int(g)));
    }
    Json::Obj(fields)
}

pub fn descriptor_from_json(v: &Value) -> Result<TorusDescriptor, SchemaError> {
    let mu_arr = v
        .get("mu")
        .and_then(Value::as_array)
        .ok_or(SchemaError("mu must be [m1, m2]".into()))?;
    if mu_arr.len() != 2 {
        return schema("mu must be [m1, m2]");
    }
    let mu = [
        mu_arr[0].as_i64().ok_or(SchemaError("mu entry".into()))?,
        mu_arr[1].as_i64().ok_or(SchemaError("mu entry".into()))?,
    ];
    let omega_arr = v
        .get("omega")
        .and_then(Value::as_array)
        .ok_or(SchemaError("omega must be [area, area]".into()))?;
    if omega_arr.len() != 2 {
        return schema("omega must be [area, area]");
    }
    let omega = [
        area_from_json(&omega_arr[0])?,
        area_from_json(&omega_arr[1])?,
    ];
    let provenance = v
        .get("provenance")
        .and_then(Value::as_str)
        .unwrap_or("file");
    let lattice = H1LatticeData::new(mu, omega, provenance)
        .map_err(|e| SchemaError(format!("lattice: {e}")))?;
    let kind = kind_from_str(
        v.get("kind")
            .and_then(Value::as_str)
            .ok_or(SchemaError("missing kind".into()))?,
    )?;
    let mut descriptor = TorusDescriptor::custom(lattice);
    descriptor.kind = kind;
    if let Some(en) = v.get("enumerative").and_then(Value::as_object) {
        for (key, val) in en {
            let (a, b) = key
                .split_once(',')
                .ok_or(SchemaError(format!("enumerative key {key}")))?;
            let a: i64 = a.trim().parse().map_err(|_| SchemaError(format!("enumerative key {key}")))?;
            let b: i64 = b.trim().parse().map_err(|_| SchemaError(format!("enumerative key {key}")))?;
            let count = val
                .as_u64()
                .filter(|&c| c <= 1)
                .ok_or(SchemaError("enumerative values are mod-2 counts".into()))?;
            descriptor.enumerative.insert((a, b), count as u8);
        }
    }
    descriptor.pi1_image_generator = v.get("pi1_image").and_then(Value::as_i64);
    if let Some(adm) = v.get("admissible").and_then(Value::as_bool) {
        descriptor.admissible = Admissibility {
            admissible: adm,
            reason: v
                .get("admissible_reason")
                .and_then(Value::as_str)
                .unwrap_or("from file")
                .to_string(),
        };
    }
    Ok(descriptor)
}

pub fn verdict_to_json(
    verdict: &Verdict,
    l1: &TorusDescriptor,
    l2: &TorusDescriptor,
) -> Json {
    let mut fields = vec![
        ("conclusion", Json::str(verdict.conclusion.as_str())),
        ("bounds_solid_torus", Json::Bool(verdict.bounds_solid_torus)),
        (
            "homologically_unlinked",
            Json::Bool(verdict.homologically_unlinked),
        ),
        (
            "citations",
            Json::arr(verdict.citations.iter().map(|c| Json::str(c))),
        ),
        (
            "notes",
            Json::arr(verdict.notes.iter().map(|n| Json::str(n))),
        ),
    ];
    if let Ok(a) = a2(&l1.lattice) {
        fields.push(("a2_l1", area_to_json(&a)));
    }
    if let Ok(a) = a2(&l2.lattice) {
        fields.push(("a2_l2", area_to_json(&a)));
    }
    fields.push(("l1_monotone", Json::Bool(monotonicity(&l1.lattice).is_some())));
    fields.push(("l2_monotone", Json::Bool(monotonicity(&l2.lattice).is_some())));
    Json::Obj(fields)
}

pub fn obstruction_to_json(o: &EmbeddingObstruction) -> Json {
    let mut fields = vec![
        ("obstructed", Json::Bool(o.obstructed)),
        ("above_ratio_threshold", Json::Bool(o.above_ratio_threshold)),
        (
            "radius_exceeds_capacity",
            Json::Bool(o.radius_exceeds_capacity),
        ),
        ("capacity", Json::Num(o.capacity)),
        ("reason", Json::str(&o.reason)),
    ];
    if let Some(a) = o.torus_a2 {
        fields.push(("torus_a2", Json::Num(a)));
    }
    Json::Obj(fields)
}
