//! Movie and surface JSON, loop and curve CSV.

use serde_json::Value;
use torlink_core::{LagrangianSurface, Movie, Point4, SampledCurve2, SampledLoop4, SurfaceKind};

use super::json::Json;
use super::{schema, SchemaError};

fn as_f64(v: &Value, what: &str) -> Result<f64, SchemaError> {
    v.as_f64()
        .ok_or_else(|| SchemaError(format!("{what}: expected a number")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array()
        .ok_or_else(|| SchemaError(format!("{what}: expected an array")))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, SchemaError> {
    v.get(name)
        .ok_or_else(|| SchemaError(format!("missing field {name}")))
}

pub fn movie_to_json(movie: &Movie) -> Json {
    Json::Obj(vec![
        (
            "t_grid",
            Json::arr(movie.t_grid().iter().map(|&t| Json::Num(t))),
        ),
        (
            "frames",
            Json::arr(movie.frames().iter().map(|f| {
                Json::arr(
                    f.samples()
                        .iter()
                        .map(|p| Json::arr([Json::Num(p[0]), Json::Num(p[1])])),
                )
            })),
        ),
        ("z0", Json::arr(movie.z0().iter().map(|&z| Json::Num(z)))),
    ])
}

pub fn movie_from_json(v: &Value) -> Result<Movie, SchemaError> {
    let t_grid: Vec<f64> = as_array(field(v, "t_grid")?, "t_grid")?
        .iter()
        .map(|x| as_f64(x, "t_grid entry"))
        .collect::<Result<_, _>>()?;
    let mut frames = Vec::new();
    for (j, frame) in as_array(field(v, "frames")?, "frames")?.iter().enumerate() {
        let mut samples = Vec::new();
        for p in as_array(frame, "frame")? {
            let pair = as_array(p, "frame sample")?;
            if pair.len() != 2 {
                return schema(format!("frame {j}: sample is not an [x,y] pair"));
            }
            samples.push([as_f64(&pair[0], "x")?, as_f64(&pair[1], "y")?]);
        }
        frames.push(
            SampledCurve2::new(samples, true)
                .map_err(|e| SchemaError(format!("frame {j}: {e}")))?,
        );
    }
    let z0: Vec<f64> = as_array(field(v, "z0")?, "z0")?
        .iter()
        .map(|x| as_f64(x, "z0 entry"))
        .collect::<Result<_, _>>()?;
    Movie::new(t_grid, frames, z0).map_err(|e| SchemaError(format!("movie: {e}")))
}

pub fn surface_to_json(surface: &LagrangianSurface) -> Json {
    let (ns, nt) = surface.dims();
    let mut fields = vec![
        (
            "kind",
            Json::str(match surface.kind() {
                SurfaceKind::Torus => "torus",
                SurfaceKind::Cylinder => "cylinder",
            }),
        ),
        ("N_s", Json::Int(ns as i64)),
        ("N_t", Json::Int(nt as i64)),
        (
            "grid",
            Json::arr((0..ns).map(|i| {
                Json::arr((0..nt).map(|j| {
                    let p = surface.point(i, j);
                    Json::arr([
                        Json::Num(p.x1),
                        Json::Num(p.y1),
                        Json::Num(p.x2),
                        Json::Num(p.y2),
                    ])
                }))
            })),
        ),
        ("lagrangian_defect", Json::Num(surface.lagrangian_defect())),
    ];
    if let Some((tv, period)) = surface.t_values() {
        fields.push(("t_params", Json::arr(tv.iter().map(|&t| Json::Num(t)))));
        fields.push(("t_period", Json::Num(*period)));
    }
    Json::Obj(fields)
}

pub fn surface_from_json(v: &Value) -> Result<LagrangianSurface, SchemaError> {
    let kind = match field(v, "kind")?.as_str() {
        Some("torus") => SurfaceKind::Torus,
        Some("cylinder") => SurfaceKind::Cylinder,
        _ => return schema("kind must be \"torus\" or \"cylinder\""),
    };
    let ns = field(v, "N_s")?.as_u64().ok_or(SchemaError("N_s".into()))? as usize;
    let nt = field(v, "N_t")?.as_u64().ok_or(SchemaError("N_t".into()))? as usize;
    let rows = as_array(field(v, "grid")?, "grid")?;
    if rows.len() != ns {
        return schema(format!("grid has {} rows, N_s = {ns}", rows.len()));
    }
    let mut grid = Vec::with_capacity(ns * nt);
    for row in rows {
        let cols = as_array(row, "grid row")?;
        if cols.len() != nt {
            return schema(format!("grid row has {} entries, N_t = {nt}", cols.len()));
        }
        for p in cols {
            let c = as_array(p, "grid point")?;
            if c.len() != 4 {
                return schema("grid point is not [x1,y1,x2,y2]");
            }
            grid.push(Point4::new(
                as_f64(&c[0], "x1")?,
                as_f64(&c[1], "y1")?,
                as_f64(&c[2], "x2")?,
                as_f64(&c[3], "y2")?,
            ));
        }
    }
    let t_values = match (v.get("t_params"), v.get("t_period")) {
        (Some(tv), Some(p)) => {
            let tv: Vec<f64> = as_array(tv, "t_params")?
                .iter()
                .map(|x| as_f64(x, "t_params entry"))
                .collect::<Result<_, _>>()?;
            Some((tv, as_f64(p, "t_period")?))
        }
        _ => None,
    };
    LagrangianSurface::from_grid(grid, ns, nt, kind, t_values)
        .map_err(|e| SchemaError(format!("surface: {e}")))
}

pub fn loop_to_csv(loop4: &SampledLoop4) -> String {
    let mut out = String::from("x1,y1,x2,y2\n");
    for p in loop4.samples() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            super::fmt_f64(p.x1),
            super::fmt_f64(p.y1),
            super::fmt_f64(p.x2),
            super::fmt_f64(p.y2)
        ));
    }
    out
}

pub fn loop_from_csv(text: &str) -> Result<SampledLoop4, SchemaError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == "x1,y1,x2,y2" => {}
        _ => return schema("loop csv must start with header x1,y1,x2,y2"),
    }
    let mut samples = Vec::new();
    for (k, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 4 {
            return schema(format!("row {k}: expected 4 columns"));
        }
        let mut c = [0.0f64; 4];
        for (m, cell) in cells.iter().enumerate() {
            c[m] = cell
                .trim()
                .parse()
                .map_err(|_| SchemaError(format!("row {k}: bad number {cell}")))?;
        }
        samples.push(Point4::new(c[0], c[1], c[2], c[3]));
    }
    SampledLoop4::new(samples).map_err(|e| SchemaError(format!("loop: {e}")))
}

pub fn curve_to_csv(curve: &SampledCurve2) -> String {
    let mut out = String::from("x,y\n");
    for p in curve.samples() {
        out.push_str(&format!(
            "{},{}\n",
            super::fmt_f64(p[0]),
            super::fmt_f64(p[1])
        ));
    }
    out
}

pub fn curve_from_csv(text: &str, closed: bool) -> Result<SampledCurve2, SchemaError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == "x,y" => {}
        _ => return schema("curve csv must start with header x,y"),
    }
    let mut samples = Vec::new();
    for (k, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 2 {
            return schema(format!("row {k}: expected 2 columns"));
        }
        samples.push([
            cells[0]
                .trim()
                .parse()
                .map_err(|_| SchemaError(format!("row {k}: bad number")))?,
            cells[1]
                .trim()
                .parse()
                .map_err(|_| SchemaError(format!("row {k}: bad number")))?,
        ]);
    }
    SampledCurve2::new(samples, closed).map_err(|e| SchemaError(format!("curve: {e}")))
}
