//! Close-up gluing: truncate a Lagrangian cylinder at |y2| = delta and glue
//! in a return tube, producing a closed Lagrangian torus with marked meridian
//! and longitude and two flat-disk families.
//!
//! The return tube is the meridian circle swept along a planar profile in the
//! (x2,y2)-plane: two straight runs at heights x2 = 0 and x2 = alpha joined
//! by semicircular caps beyond |y2| = delta + 1. A product of one curve per
//! symplectic plane is exactly Lagrangian, so the only non-exact region of
//! the glued torus is the movie transition band (empty for the close-up of a
//! static standard cylinder).

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use super::lift::lift_grid;
use super::linked::{movie_on_grid, LinkedCylinderParams};
use super::MovieError;
use crate::geom::surface::GridPath;
use crate::geom::{
    liouville_integral, maslov_index, LagrangianSurface, Point4, SampledLoop4, SurfaceKind,
};

#[derive(Clone, Copy, Debug)]
pub struct CloseUpParams {
    /// Height of the far sheet of the return tube; must exceed the meridian
    /// disk area π·r² so longitude classes dominate the area lattice.
    pub alpha: f64,
    /// Truncation half-height; the cylinder must be standard past |y2| =
    /// delta - 2 for the tube to attach.
    pub delta: f64,
    pub ns: usize,
    pub nt: usize,
}

impl CloseUpParams {
    pub fn new(alpha: f64, delta: f64) -> CloseUpParams {
        CloseUpParams {
            alpha,
            delta,
            ns: 256,
            nt: 256,
        }
    }

    pub fn with_resolution(mut self, ns: usize, nt: usize) -> CloseUpParams {
        self.ns = ns;
        self.nt = nt;
        self
    }
}

/// A closed-up torus with its marked loops and measured invariants.
#[derive(Clone, Debug)]
pub struct ClosedUpTorus {
    pub surface: LagrangianSurface,
    /// Meridian at y2 = delta, positively oriented in the (x1,y1)-plane.
    pub sigma: SampledLoop4,
    /// Longitude through φ(0,·), oriented so its λ-area is positive.
    pub tau: SampledLoop4,
    pub sigma_path: GridPath,
    pub tau_path: GridPath,
    pub area_sigma: f64,
    pub area_tau: f64,
    pub maslov_sigma: i64,
    pub maslov_tau: i64,
    /// The two flat-disk family heights {0, alpha}.
    pub disk_heights: [f64; 2],
    /// Center and radius of the meridian circle of the return tube.
    pub tube_center: (f64, f64),
    pub tube_radius: f64,
    pub alpha: f64,
    pub delta: f64,
    /// Present when the movie band is the static cylinder over this disk
    /// (center_x, center_y, radius); then the planar solid cylinder spans
    /// the torus inside |y2| <= delta - 1.
    pub static_core: Option<(f64, f64, f64)>,
}

/// Piecewise profile of the closed curve traced in the (x2,y2)-plane,
/// parametrized by arc length; the movie band occupies [0, 2·delta).
struct Profile {
    delta: f64,
    alpha: f64,
}

impl Profile {
    fn section_lengths(&self) -> [f64; 6] {
        let cap = 0.5 * PI * self.alpha;
        [
            2.0 * self.delta,         // movie band, y2 = -delta .. delta
            1.0,                      // up segment at x2 = 0
            cap,                      // top cap
            2.0 * (self.delta + 1.0), // down run at x2 = alpha
            cap,                      // bottom cap
            1.0,                      // closing segment at x2 = 0
        ]
    }

    fn period(&self) -> f64 {
        self.section_lengths().iter().sum()
    }

    /// (x2, y2) at arc parameter `l` in [0, period), for a static band.
    fn point(&self, mut l: f64) -> (f64, f64) {
        let lens = self.section_lengths();
        let (d, a) = (self.delta, self.alpha);
        if l < lens[0] {
            return (0.0, -d + l);
        }
        l -= lens[0];
        if l < lens[1] {
            return (0.0, d + l);
        }
        l -= lens[1];
        if l < lens[2] {
            let th = PI * (1.0 - l / lens[2]);
            return (
                0.5 * a * (1.0 + libm::cos(th)),
                d + 1.0 + 0.5 * a * libm::sin(th),
            );
        }
        l -= lens[2];
        if l < lens[3] {
            return (a, d + 1.0 - l);
        }
        l -= lens[3];
        if l < lens[4] {
            let th = PI * l / lens[4];
            return (
                0.5 * a * (1.0 + libm::cos(th)),
                -(d + 1.0) - 0.5 * a * libm::sin(th),
            );
        }
        l -= lens[4];
        (0.0, -(d + 1.0) + l)
    }
}

/// Columns per section, proportional to length, each at least 3, summing to
/// `total`.
fn allocate_columns(lengths: &[f64; 6], total: usize) -> [usize; 6] {
    let period: f64 = lengths.iter().sum();
    let mut n = [0usize; 6];
    let mut assigned = 0;
    for k in 0..6 {
        n[k] = ((total as f64 * lengths[k] / period) as usize).max(3);
        assigned += n[k];
    }
    if assigned < total {
        n[0] += total - assigned;
    } else {
        let excess = assigned - total;
        assert!(n[0] > excess + 16, "resolution too coarse for the sections");
        n[0] -= excess;
    }
    n
}

enum Band {
    /// Static standard cylinder over the disk at (a, b) with radius r.
    Static { center: (f64, f64), radius: f64 },
    /// The truncated linked-cylinder lift.
    Linked(LinkedCylinderParams),
}

fn build_torus(band: Band, close: &CloseUpParams) -> Result<ClosedUpTorus, MovieError> {
    let (tube_center, tube_radius, static_core) = match &band {
        Band::Static { center, radius } => (*center, *radius, Some((center.0, center.1, *radius))),
        Band::Linked(p) => ((p.d, 0.0), p.r2, None),
    };
    let min_alpha = PI * tube_radius * tube_radius;
    if close.alpha <= min_alpha {
        return Err(MovieError::AlphaTooSmall {
            alpha: close.alpha,
            min: min_alpha,
        });
    }
    let min_delta = match &band {
        Band::Static { .. } => 2.5,
        Band::Linked(p) => p.t_extent + 2.0,
    };
    if close.delta < min_delta {
        return Err(MovieError::DeltaTooSmall {
            delta: close.delta,
            min: min_delta,
        });
    }
    if close.ns < 64 || close.nt < 64 {
        return Err(MovieError::BadParams(alloc::format!(
            "close-up resolution {}x{} below 64",
            close.ns,
            close.nt
        )));
    }

    let profile = Profile {
        delta: close.delta,
        alpha: close.alpha,
    };
    let lengths = profile.section_lengths();
    let n_cols = allocate_columns(&lengths, close.nt);
    let (ns, nt) = (close.ns, close.nt);
    let n_movie = n_cols[0];

    let mut grid = alloc::vec![Point4::new(0.0, 0.0, 0.0, 0.0); ns * nt];
    let mut t_values = Vec::with_capacity(nt);

    // movie band columns at t = -delta + l, l uniform in [0, 2 delta)
    let movie_ts: Vec<f64> = (0..n_movie)
        .map(|k| -close.delta + 2.0 * close.delta * k as f64 / n_movie as f64)
        .collect();
    match &band {
        Band::Static { center, radius } => {
            for (k, &t) in movie_ts.iter().enumerate() {
                t_values.push(t + close.delta);
                for i in 0..ns {
                    let s = i as f64 / ns as f64;
                    grid[i * nt + k] = Point4::new(
                        center.0 + radius * libm::cos(TAU * s),
                        center.1 + radius * libm::sin(TAU * s),
                        0.0,
                        t,
                    );
                }
            }
        }
        Band::Linked(p) => {
            let sched = p.schedule();
            let mut p_at_res = *p;
            p_at_res.ns = ns;
            let movie = movie_on_grid(&p_at_res, &sched, &movie_ts)?;
            let (movie_grid, _, _, _) = lift_grid(&movie);
            for (k, &t) in movie_ts.iter().enumerate() {
                t_values.push(t + close.delta);
                for i in 0..ns {
                    grid[i * nt + k] = movie_grid[i * n_movie + k];
                }
            }
        }
    }

    // return tube columns: the meridian circle swept along the profile
    let mut l_start = lengths[0];
    let mut j = n_movie;
    for sec in 1..6 {
        for k in 0..n_cols[sec] {
            let l = l_start + lengths[sec] * k as f64 / n_cols[sec] as f64;
            let (x2, y2) = profile.point(l);
            t_values.push(l);
            for i in 0..ns {
                let s = i as f64 / ns as f64;
                grid[i * nt + j] = Point4::new(
                    tube_center.0 + tube_radius * libm::cos(TAU * s),
                    tube_center.1 + tube_radius * libm::sin(TAU * s),
                    x2,
                    y2,
                );
            }
            j += 1;
        }
        l_start += lengths[sec];
    }
    debug_assert_eq!(j, nt);

    let surface = LagrangianSurface::from_grid(
        grid,
        ns,
        nt,
        SurfaceKind::Torus,
        Some((t_values, profile.period())),
    )?;

    // meridian: the first up-segment column sits exactly at y2 = delta
    let j_sigma = n_movie;
    let sigma_path = surface.s_loop_path(j_sigma);
    let sigma = surface.s_loop(j_sigma);
    // longitude through φ(0,·), traversed against t so that the profile loop
    // is positively oriented in the (x2,y2)-plane
    let tau_path: GridPath = (0..nt).rev().map(|jj| (0usize, jj)).collect();
    let tau_samples: Vec<Point4> = tau_path
        .iter()
        .map(|&(i, jj)| surface.point(i, jj))
        .collect();
    let tau = SampledLoop4::new(tau_samples)?;

    let area_sigma = liouville_integral(&sigma)?;
    let area_tau = liouville_integral(&tau)?;
    let maslov_sigma = maslov_index(&surface, &sigma_path)?;
    let maslov_tau = maslov_index(&surface, &tau_path)?;

    Ok(ClosedUpTorus {
        surface,
        sigma,
        tau,
        sigma_path,
        tau_path,
        area_sigma,
        area_tau,
        maslov_sigma,
        maslov_tau,
        disk_heights: [0.0, close.alpha],
        tube_center,
        tube_radius,
        alpha: close.alpha,
        delta: close.delta,
        static_core,
    })
}

/// Glue the truncated lifted linked cylinder to a return tube.
///
/// Returns the torus with meridian sigma (at y2 = delta), longitude tau
/// (through φ(0,·), oriented to positive λ-area), their areas and Maslov
/// indices, and the two flat-disk heights {0, alpha}.
pub fn close_up(
    cyl: &LinkedCylinderParams,
    close: &CloseUpParams,
) -> Result<ClosedUpTorus, MovieError> {
    cyl.validate()?;
    build_torus(Band::Linked(*cyl), close)
}

/// Close up the static standard cylinder over the disk at `center` with the
/// given radius. The result is an exactly Lagrangian product torus spanned,
/// inside |y2| <= delta - 1, by the planar solid cylinder of its core disk.
pub fn close_up_standard_cylinder(
    center: (f64, f64),
    radius: f64,
    close: &CloseUpParams,
) -> Result<ClosedUpTorus, MovieError> {
    if !(radius > 0.0) {
        return Err(MovieError::BadParams(alloc::format!(
            "cylinder radius {radius} must be positive"
        )));
    }
    build_torus(Band::Static { center, radius }, close)
}

/// A flat disk of one of the two families, with its sampled boundary and
/// interior and its λ-area measured on the boundary.
#[derive(Clone, Debug)]
pub struct FlatDisk {
    pub boundary: SampledLoop4,
    pub interior: Vec<Point4>,
    pub area: f64,
    pub height: f64,
    pub y2: f64,
}

/// The flat disk at the given height ∈ {0, alpha} and family parameter
/// s ∈ [0, 1]; its boundary lies on the torus.
pub fn flat_disk_family(
    torus: &ClosedUpTorus,
    height: f64,
    s: f64,
) -> Result<FlatDisk, MovieError> {
    let tol = 1e-12 * torus.alpha.max(1.0);
    let ok = torus
        .disk_heights
        .iter()
        .any(|&h| libm::fabs(h - height) <= tol);
    if !ok {
        return Err(MovieError::BadHeight { given: height });
    }
    if !(0.0..=1.0).contains(&s) {
        return Err(MovieError::BadParams(alloc::format!(
            "family parameter s = {s} outside [0,1]"
        )));
    }
    let y2 = torus.delta + s;
    let ((cx, cy), r) = (torus.tube_center, torus.tube_radius);
    let n = 256;
    let boundary = SampledLoop4::from_fn(n, |u| {
        Point4::new(cx + r * libm::cos(TAU * u), cy + r * libm::sin(TAU * u), height, y2)
    })?;
    let mut interior = Vec::new();
    let rings = 16;
    for q in 0..rings {
        let rho = r * (q as f64 + 0.5) / rings as f64;
        for k in 0..32 {
            let u = TAU * k as f64 / 32.0;
            interior.push(Point4::new(
                cx + rho * libm::cos(u),
                cy + rho * libm::sin(u),
                height,
                y2,
            ));
        }
    }
    let area = liouville_integral(&boundary)?;
    Ok(FlatDisk {
        boundary,
        interior,
        area,
        height,
        y2,
    })
}
