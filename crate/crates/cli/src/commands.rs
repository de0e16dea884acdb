//! Command implementations: construct, invariants, verdict, link, audit,
//! capacity. Each returns machine-readable JSON and a pass/fail status.

use std::f64::consts::PI;
use std::path::Path;

use torlink_core::audit::{audit_building, AuditProfile};
use torlink_core::lattice::{
    a2, capacity_polydisk, chekanov_descriptor_exact, clifford_descriptor_exact,
    closeup_descriptor, embedding_obstruction, monotonicity, product_torus_exact,
    unlinking_verdict, TorusDescriptor,
};
use torlink_core::{
    close_up, close_up_standard_cylinder, homological_linking_certificate, intersection_number,
    lift, linked_cylinder_movie, validate_movie, CloseUpParams, ClosedUpTorus,
    LinkedCylinderParams, Movie, Rational, SampledLoop4, SolidTorusModel, SpanningModel,
};

use crate::io::json::Json;
use crate::io::{building, geometry, lattice as lattice_io, svg, SchemaError};

/// Command failure with its CLI exit code semantics.
#[derive(Debug)]
pub enum CmdError {
    /// Exit 1: filesystem trouble.
    Io(String),
    /// Exit 2: a verification check failed.
    CheckFailed(String),
    /// Exit 3: input did not match the expected schema.
    Schema(String),
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Io(m) => write!(f, "io error: {m}"),
            CmdError::CheckFailed(m) => write!(f, "check failed: {m}"),
            CmdError::Schema(m) => write!(f, "schema error: {m}"),
        }
    }
}

impl std::error::Error for CmdError {}

impl From<SchemaError> for CmdError {
    fn from(e: SchemaError) -> CmdError {
        CmdError::Schema(e.0)
    }
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Io(_) => 1,
            CmdError::CheckFailed(_) => 2,
            CmdError::Schema(_) => 3,
        }
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CmdError> {
    std::fs::create_dir_all(dir).map_err(|e| CmdError::Io(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))
}

fn plot_loop(dir: &Path, name: &str, loop4: &SampledLoop4) -> Result<(), CmdError> {
    let p1: Vec<[f64; 2]> = loop4.samples().iter().map(|p| [p.x1, p.y1]).collect();
    let p2: Vec<[f64; 2]> = loop4.samples().iter().map(|p| [p.x2, p.y2]).collect();
    write_file(dir, &format!("{name}_p1.svg"), &svg::polyline_svg(&p1, name))?;
    write_file(dir, &format!("{name}_p2.svg"), &svg::polyline_svg(&p2, name))
}

pub fn check_resolution(n: usize) -> Result<usize, CmdError> {
    if !(64..=4096).contains(&n) || !n.is_power_of_two() {
        return Err(CmdError::Schema(format!(
            "resolution {n} must be a power of two in [64, 4096]"
        )));
    }
    Ok(n)
}

pub fn construct_clifford(
    r: f64,
    n: usize,
    out: &Path,
    plot: bool,
) -> Result<Json, CmdError> {
    let surface = torlink_core::sample_clifford(r, n)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    write_file(out, "clifford.json", &geometry::surface_to_json(&surface).to_string_pretty())?;
    if plot {
        plot_loop(out, "clifford_meridian", &surface.s_loop(0))?;
    }
    Ok(Json::Obj(vec![
        ("kind", Json::str("clifford")),
        ("r", Json::Num(r)),
        ("lagrangian_defect", Json::Num(surface.lagrangian_defect())),
        ("embedded", Json::Bool(surface.embedded_certificate())),
        ("file", Json::str("clifford.json")),
    ]))
}

pub fn construct_chekanov(
    r: f64,
    n: usize,
    out: &Path,
    plot: bool,
) -> Result<Json, CmdError> {
    let surface = torlink_core::sample_chekanov(r, n)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let ok = surface.lagrangian_defect() <= 1e-6;
    write_file(out, "chekanov.json", &geometry::surface_to_json(&surface).to_string_pretty())?;
    if plot {
        plot_loop(out, "chekanov_theta", &surface.t_loop(0).expect("torus"))?;
    }
    if !ok {
        return Err(CmdError::CheckFailed(format!(
            "chekanov residual {} above tolerance",
            surface.lagrangian_defect()
        )));
    }
    Ok(Json::Obj(vec![
        ("kind", Json::str("chekanov")),
        ("r", Json::Num(r)),
        ("monotonicity_factor", Json::Num(0.5 * PI * r * r)),
        ("lagrangian_defect", Json::Num(surface.lagrangian_defect())),
        ("embedded", Json::Bool(surface.embedded_certificate())),
        ("file", Json::str("chekanov.json")),
    ]))
}

/// Everything the linked-pair pipeline produces, for the CLI and for tests.
pub struct LinkedPair {
    pub movie: Movie,
    pub cylinder: torlink_core::LagrangianSurface,
    pub l1: ClosedUpTorus,
    pub l2: ClosedUpTorus,
    pub a2_l1: f64,
    pub a2_l2: f64,
    pub linked: bool,
    pub witness_class: i64,
    pub tail_mismatch: f64,
    pub min_distance_to_core_cylinder: f64,
    pub base_track_crossings: usize,
    pub params: LinkedCylinderParams,
    pub close1: CloseUpParams,
    pub close2: CloseUpParams,
}

/// Build the linked pair with A2 targets a1 > a2 > 0 and verify the whole
/// contract: the movie validates, the lift is standard in the tails and
/// clears the core cylinder, the closed-up tori carry the right invariants,
/// and the linking certificate is positive with a unit witness class.
pub fn build_linked_pair(
    a1: f64,
    a2_target: f64,
    resolution: usize,
    alpha_override: Option<f64>,
) -> Result<LinkedPair, CmdError> {
    if !(a1 > a2_target && a2_target > 0.0) {
        return Err(CmdError::CheckFailed(format!(
            "linked pair needs the first minimal area larger: got {a1} and {a2_target}"
        )));
    }
    let r1 = (a1 / PI).sqrt();
    let r2 = (a2_target / PI).sqrt();
    let params = LinkedCylinderParams::new(r1, r2)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?
        .with_resolution(resolution, resolution);
    let t = params.t_extent;
    let delta2 = t + 5.0;
    let delta1 = delta2 + 2.0 * t;
    // the tube height must exceed the meridian disk area and keep the far
    // cap inside the validity window of the bigger torus
    let alpha2 = alpha_override.unwrap_or_else(|| {
        (4.0 * t - 4.0).min((PI * r2 * r2).max(2.0) * 4.0)
    });
    let alpha1 = (PI * r1 * r1).max(2.0) * 4.0;
    if delta2 + 1.0 + 0.5 * alpha2 > delta1 - 1.0 {
        return Err(CmdError::CheckFailed(format!(
            "tube height {alpha2} leaves the validity window of the outer torus"
        )));
    }

    let movie = linked_cylinder_movie(&params).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let report = validate_movie(&movie, None);
    if !report.ok {
        return Err(CmdError::CheckFailed(format!(
            "movie validation failed: area drift {:e}",
            report.max_area_drift
        )));
    }
    let cylinder = lift(&movie).map_err(|e| CmdError::CheckFailed(e.to_string()))?;

    // standard-cylinder tail agreement
    let (ns, nt) = cylinder.dims();
    let mut tail_mismatch = 0.0f64;
    let t_grid = movie.t_grid();
    for (j, &tj) in t_grid.iter().enumerate().take(nt) {
        if tj.abs() < t {
            continue;
        }
        for i in 0..ns {
            let q = cylinder.point(i, j);
            let s = i as f64 / ns as f64;
            let ex = params.d + r2 * (std::f64::consts::TAU * s).cos();
            let ey = r2 * (std::f64::consts::TAU * s).sin();
            tail_mismatch = tail_mismatch
                .max((q.x1 - ex).abs())
                .max((q.y1 - ey).abs())
                .max(q.x2.abs());
        }
    }
    // clearance from the core standard cylinder C(0,0;r1)
    let mut min_distance = f64::INFINITY;
    for q in cylinder.grid() {
        let radial = (q.x1 * q.x1 + q.y1 * q.y1).sqrt() - r1;
        min_distance = min_distance.min((radial * radial + q.x2 * q.x2).sqrt());
    }

    let close2 = CloseUpParams::new(alpha2, delta2).with_resolution(resolution, resolution);
    let l2 = close_up(&params, &close2).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let close1 = CloseUpParams::new(alpha1, delta1).with_resolution(resolution, resolution);
    let l1 = close_up_standard_cylinder((0.0, 0.0), r1, &close1)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;

    // base-track crossing count through the core solid cylinder
    let core = SolidTorusModel::planar_disk_cylinder(0.0, 0.0, r1)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let crossings = intersection_number(&l2.tau, &core)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;

    // the certificate: basis loops of L2 against the spanning torus of L1
    let spanning = SpanningModel::closed_up(&l1)
        .ok_or_else(|| CmdError::CheckFailed("outer torus has no catalog spanning model".into()))?;
    let certificate =
        homological_linking_certificate(&spanning, &[l2.sigma.clone(), l2.tau.clone()])
            .map_err(|e| CmdError::CheckFailed(e.to_string()))?;

    let d1 = closeup_descriptor(&l1).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let d2 = closeup_descriptor(&l2).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let a2_l1 = a2(&d1.lattice)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?
        .to_f64();
    let a2_l2 = a2(&d2.lattice)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?
        .to_f64();

    Ok(LinkedPair {
        movie,
        cylinder,
        l1,
        l2,
        a2_l1,
        a2_l2,
        linked: certificate.linked,
        witness_class: certificate.witness.map(|(_, c)| c).unwrap_or(0),
        tail_mismatch,
        min_distance_to_core_cylinder: min_distance,
        base_track_crossings: crossings.crossings.len(),
        params,
        close1,
        close2,
    })
}

pub fn closed_up_to_json(t: &ClosedUpTorus) -> Json {
    Json::Obj(vec![
        ("surface", geometry::surface_to_json(&t.surface)),
        ("sigma_csv", Json::str(&geometry::loop_to_csv(&t.sigma))),
        ("tau_csv", Json::str(&geometry::loop_to_csv(&t.tau))),
        ("area_sigma", Json::Num(t.area_sigma)),
        ("area_tau", Json::Num(t.area_tau)),
        ("maslov_sigma", Json::Int(t.maslov_sigma)),
        ("maslov_tau", Json::Int(t.maslov_tau)),
        (
            "disk_heights",
            Json::arr([Json::Num(t.disk_heights[0]), Json::Num(t.disk_heights[1])]),
        ),
    ])
}

/// The pass/fail gate for the constructed pair.
pub fn linked_pair_checks(pair: &LinkedPair, tol: f64) -> Vec<(String, bool)> {
    let r1 = pair.params.r1;
    let a1 = PI * r1 * r1;
    let a2v = PI * pair.params.r2 * pair.params.r2;
    vec![
        (
            format!("a2 of the outer torus within {tol:e} of the target"),
            (pair.a2_l1 - a1).abs() <= tol * a1,
        ),
        (
            format!("a2 of the threaded torus within {tol:e} of the target"),
            (pair.a2_l2 - a2v).abs() <= tol * a2v,
        ),
        (
            "lagrangian defect of the threaded torus within 1e-6".to_string(),
            pair.l2.surface.lagrangian_defect() <= 1e-6,
        ),
        (
            "lagrangian defect of the outer torus within 1e-6".to_string(),
            pair.l1.surface.lagrangian_defect() <= 1e-6,
        ),
        (
            "cylinder lift standard in the tails to 1e-9".to_string(),
            pair.tail_mismatch <= 1e-9,
        ),
        (
            "cylinder clears the core standard cylinder by 1% of r1".to_string(),
            pair.min_distance_to_core_cylinder > 0.01 * r1,
        ),
        (
            "base track crosses the solid cylinder exactly once".to_string(),
            pair.base_track_crossings == 1,
        ),
        (
            "marked loops have Maslov index 2".to_string(),
            pair.l2.maslov_sigma == 2
                && pair.l2.maslov_tau == 2
                && pair.l1.maslov_sigma == 2
                && pair.l1.maslov_tau == 2,
        ),
        (
            "homological linking certified with a unit witness class".to_string(),
            pair.linked && pair.witness_class.abs() == 1,
        ),
    ]
}

pub fn construct_linked_pair(
    a1: f64,
    a2_target: f64,
    resolution: usize,
    alpha: Option<f64>,
    tol: f64,
    out: &Path,
    plot: bool,
) -> Result<(Json, bool), CmdError> {
    let pair = build_linked_pair(a1, a2_target, resolution, alpha)?;
    let checks = linked_pair_checks(&pair, tol);
    let ok = checks.iter().all(|(_, pass)| *pass);

    write_file(out, "movie.json", &geometry::movie_to_json(&pair.movie).to_string_pretty())?;
    write_file(
        out,
        "cylinder.json",
        &geometry::surface_to_json(&pair.cylinder).to_string_pretty(),
    )?;
    write_file(out, "l1.json", &closed_up_to_json(&pair.l1).to_string_pretty())?;
    write_file(out, "l2.json", &closed_up_to_json(&pair.l2).to_string_pretty())?;
    write_file(out, "sigma.csv", &geometry::loop_to_csv(&pair.l2.sigma))?;
    write_file(out, "tau.csv", &geometry::loop_to_csv(&pair.l2.tau))?;
    if plot {
        plot_loop(out, "sigma", &pair.l2.sigma)?;
        plot_loop(out, "tau", &pair.l2.tau)?;
        // one representative movie frame mid-transition
        let mid = pair.movie.frames().len() * 3 / 4;
        let frame = &pair.movie.frames()[mid];
        write_file(
            out,
            "frame_mid.svg",
            &svg::polyline_svg(frame.samples(), "frame"),
        )?;
    }
    let validation = Json::Obj(vec![
        ("ok", Json::Bool(ok)),
        (
            "checks",
            Json::arr(checks.iter().map(|(desc, pass)| {
                Json::Obj(vec![("check", Json::str(desc)), ("pass", Json::Bool(*pass))])
            })),
        ),
        ("a2_l1", Json::Num(pair.a2_l1)),
        ("a2_l2", Json::Num(pair.a2_l2)),
        ("tail_mismatch", Json::Num(pair.tail_mismatch)),
        (
            "min_distance_to_core_cylinder",
            Json::Num(pair.min_distance_to_core_cylinder),
        ),
        (
            "lagrangian_defect_l2",
            Json::Num(pair.l2.surface.lagrangian_defect()),
        ),
        ("linked", Json::Bool(pair.linked)),
        ("witness_class", Json::Int(pair.witness_class)),
    ]);
    write_file(out, "validation.json", &validation.to_string_pretty())?;
    Ok((validation, ok))
}

/// Parse a decimal as an exact rational where possible.
pub fn parse_exact(s: &str) -> Result<Rational, CmdError> {
    Rational::from_decimal_str(s)
        .ok_or_else(|| CmdError::Schema(format!("{s} is not a decimal number")))
}

pub fn invariants_product(r: &str, s: &str) -> Result<Json, CmdError> {
    let r = parse_exact(r)?;
    let s = parse_exact(s)?;
    let descriptor = product_torus_exact(r * r, s * s)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    descriptor_invariants(&descriptor)
}

pub fn descriptor_invariants(d: &TorusDescriptor) -> Result<Json, CmdError> {
    let a2_val = a2(&d.lattice).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let mono = monotonicity(&d.lattice);
    let mut fields = vec![
        ("a2", Json::str(&lattice_io::area_pretty(&a2_val))),
        ("a2_value", lattice_io::area_to_json(&a2_val)),
        ("admissible", Json::Bool(d.admissible.admissible)),
        ("monotone", Json::Bool(mono.is_some())),
    ];
    if let Some(c) = mono {
        fields.push(("monotonicity_factor", Json::str(&lattice_io::area_pretty(&c))));
    }
    fields.push(("admissible_reason", Json::str(&d.admissible.reason)));
    fields.push(("descriptor", lattice_io::descriptor_to_json(d)));
    Ok(Json::Obj(fields))
}

/// Torus specs for the verdict command: `clifford:R`, `chekanov:R`,
/// `product:R:S`, or `file:PATH` for a descriptor JSON.
pub fn parse_torus_spec(spec: &str) -> Result<TorusDescriptor, CmdError> {
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or("");
    let rest: Vec<&str> = parts.collect();
    match (kind, rest.as_slice()) {
        ("clifford", [r]) => {
            let r = parse_exact(r)?;
            clifford_descriptor_exact(r * r).map_err(|e| CmdError::CheckFailed(e.to_string()))
        }
        ("chekanov", [r]) => {
            let r = parse_exact(r)?;
            chekanov_descriptor_exact(r * r).map_err(|e| CmdError::CheckFailed(e.to_string()))
        }
        ("product", [r, s]) => {
            let r = parse_exact(r)?;
            let s = parse_exact(s)?;
            product_torus_exact(r * r, s * s).map_err(|e| CmdError::CheckFailed(e.to_string()))
        }
        ("file", [path]) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CmdError::Io(format!("{path}: {e}")))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| CmdError::Schema(e.to_string()))?;
            Ok(lattice_io::descriptor_from_json(&value)?)
        }
        _ => Err(CmdError::Schema(format!(
            "torus spec {spec}: use clifford:R, chekanov:R, product:R:S, or file:PATH"
        ))),
    }
}

pub fn verdict_cmd(
    l1: &str,
    l2: &str,
    pi1_trivial: Option<bool>,
) -> Result<Json, CmdError> {
    let d1 = parse_torus_spec(l1)?;
    let d2 = parse_torus_spec(l2)?;
    let verdict = unlinking_verdict(&d1, &d2, pi1_trivial)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    Ok(lattice_io::verdict_to_json(&verdict, &d1, &d2))
}

pub fn audit_cmd(path: &Path, profile: Option<&str>) -> Result<(Json, bool), CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CmdError::Schema(e.to_string()))?;
    let mut spec = building::building_from_json(&value)?;
    if let Some(name) = profile {
        spec.profile = AuditProfile::parse(name)
            .ok_or_else(|| CmdError::Schema(format!("unknown profile {name}")))?;
    }
    match audit_building(&spec) {
        Ok(report) => {
            let ok = report.ok();
            Ok((building::report_to_json(&report), ok))
        }
        Err(e) => Err(CmdError::CheckFailed(e.to_string())),
    }
}

pub fn capacity_cmd(a: f64, b: f64) -> Result<Json, CmdError> {
    let c = capacity_polydisk(a, b).map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    // exact pretty form when the radius squared is exactly rational-friendly
    let pretty = if (c - PI).abs() < 1e-15 {
        "pi".to_string()
    } else {
        crate::io::fmt_f64(c)
    };
    Ok(Json::Obj(vec![
        ("capacity", Json::Num(c)),
        ("capacity_pretty", Json::str(&pretty)),
        ("a", Json::Num(a)),
        ("b", Json::Num(b)),
    ]))
}

pub fn obstruction_cmd(r: f64, s: f64, a: f64, b: f64) -> Result<Json, CmdError> {
    let o = embedding_obstruction(r, s, a, b)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    Ok(lattice_io::obstruction_to_json(&o))
}

/// `link`: build the pair and emit the certificate JSON with the witness
/// loop's crossing records.
pub fn link_cmd(
    a1: f64,
    a2_target: f64,
    resolution: usize,
    out: &Path,
    plot: bool,
) -> Result<(Json, bool), CmdError> {
    let pair = build_linked_pair(a1, a2_target, resolution, None)?;
    let core = SolidTorusModel::planar_disk_cylinder(0.0, 0.0, pair.params.r1)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let crossings = intersection_number(&pair.l2.tau, &core)
        .map_err(|e| CmdError::CheckFailed(e.to_string()))?;
    let cert = Json::Obj(vec![
        ("linked", Json::Bool(pair.linked)),
        (
            "witness_loop",
            Json::str(if pair.witness_class != 0 { "tau.csv" } else { "" }),
        ),
        ("class", Json::Int(pair.witness_class)),
        (
            "crossings",
            Json::arr(crossings.crossings.iter().map(|c| {
                Json::Obj(vec![
                    ("t", Json::Num(c.t)),
                    ("sign", Json::Int(c.sign)),
                    (
                        "point",
                        Json::arr(c.location.coords().iter().map(|&x| Json::Num(x))),
                    ),
                ])
            })),
        ),
        ("a2_l1", Json::Num(pair.a2_l1)),
        ("a2_l2", Json::Num(pair.a2_l2)),
    ]);
    write_file(out, "certificate.json", &cert.to_string_pretty())?;
    write_file(out, "tau.csv", &geometry::loop_to_csv(&pair.l2.tau))?;
    if plot {
        plot_loop(out, "tau", &pair.l2.tau)?;
        plot_loop(out, "sigma", &pair.l2.sigma)?;
    }
    Ok((cert.clone(), pair.linked))
}

