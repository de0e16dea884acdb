//! The linked-cylinder movie: circle frames of radius r2 translating from the
//! origin past the radius-r1 standard cylinder C(0,0;r1) to the offset D,
//! with a base-height bump that clears the planar solid cylinder while the
//! frame disk overlaps the radius-r1 disk.

use alloc::format;
use alloc::vec::Vec;

use super::{smoothstep, Movie, MovieError};
use crate::geom::SampledCurve2;

#[derive(Clone, Copy, Debug)]
pub struct LinkedCylinderParams {
    pub r1: f64,
    pub r2: f64,
    /// Final center offset; at least 2(r1 + r2).
    pub d: f64,
    /// Transition extent T: frames are standard for |t| >= T.
    pub t_extent: f64,
    pub ns: usize,
    pub nt: usize,
}

/// Schedule data derived from the parameters, shared with the close-up.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Schedule {
    d: f64,
    /// Schedules finish this far inside T so that derivative stencils taken
    /// at |t| >= T only ever see flat data; tail agreement is then exact.
    pub margin: f64,
    t_a: f64,
    t_b: f64,
    t_end: f64,
    /// Bump height: clears the solid cylinder by at least r1 + r2 + 1 even
    /// against the frame-motion term of the lifted height.
    pub bump: f64,
}

impl LinkedCylinderParams {
    /// Defaults: D = 2(r1+r2), T = max(D+2, 3), 256×256 grid.
    pub fn new(r1: f64, r2: f64) -> Result<LinkedCylinderParams, MovieError> {
        let d = 2.0 * (r1 + r2);
        let p = LinkedCylinderParams {
            r1,
            r2,
            d,
            t_extent: (d + 2.0).max(3.0),
            ns: 256,
            nt: 256,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_resolution(mut self, ns: usize, nt: usize) -> LinkedCylinderParams {
        self.ns = ns;
        self.nt = nt;
        self
    }

    pub fn validate(&self) -> Result<(), MovieError> {
        if !(self.r2 > 0.0 && self.r1 > self.r2) {
            return Err(MovieError::BadParams(format!(
                "need r1 > r2 > 0, got r1 = {}, r2 = {}",
                self.r1, self.r2
            )));
        }
        if self.d < 2.0 * (self.r1 + self.r2) - 1e-12 {
            return Err(MovieError::BadParams(format!(
                "offset D = {} below 2(r1+r2) = {}",
                self.d,
                2.0 * (self.r1 + self.r2)
            )));
        }
        if self.t_extent < 2.5 {
            return Err(MovieError::BadParams(format!(
                "transition extent T = {} leaves no room for the schedules",
                self.t_extent
            )));
        }
        if self.ns < 16 || self.nt < 16 {
            return Err(MovieError::BadParams(format!(
                "resolution {}x{} too coarse",
                self.ns, self.nt
            )));
        }
        let sched = self.schedule();
        let dt = 2.0 * (self.t_extent + 1.0) / self.nt as f64;
        if 2.5 * dt > sched.margin {
            return Err(MovieError::BadParams(format!(
                "t-resolution {} too coarse for the schedule margin {}",
                self.nt, sched.margin
            )));
        }
        Ok(())
    }

    pub(crate) fn schedule(&self) -> Schedule {
        let t = self.t_extent;
        let margin = (0.1875 * (t - 1.0)).min(0.75);
        let t_end = t - margin;
        let width = t_end - 1.0;
        let t_a = 1.0 + 0.35 * width;
        let t_b = t_a + 0.7 * (t_end - t_a);
        // peak slope of the quintic smoothstep is 15/8
        let cdot_max = self.d * 1.875 / (t_end - t_a);
        let bump = self.r1 + self.r2 + 1.0 + self.r2 * cdot_max;
        Schedule {
            d: self.d,
            margin,
            t_a,
            t_b,
            t_end,
            bump,
        }
    }
}

impl Schedule {
    /// Frame-center x-offset at time t: 0 near the origin phase, D past the
    /// transition, quintic smoothstep in between. Even in t.
    pub(crate) fn center(&self, t: f64) -> f64 {
        let a = libm::fabs(t);
        self.d * smoothstep((a - self.t_a) / (self.t_end - self.t_a))
    }

    /// Base height z(0,t): equals t on |t| <= 1, holds at ±bump while the
    /// frame disk can meet the radius-r1 disk, and returns to 0 by T - margin.
    /// Odd in t.
    pub(crate) fn z0(&self, t: f64) -> f64 {
        let sign = if t < 0.0 { -1.0 } else { 1.0 };
        let a = libm::fabs(t);
        let h = self.bump;
        let v = if a <= 1.0 {
            a
        } else if a <= self.t_a {
            let s = smoothstep((a - 1.0) / (self.t_a - 1.0));
            (1.0 - s) * a + s * h
        } else if a <= self.t_b {
            h
        } else {
            h * (1.0 - smoothstep((a - self.t_b) / (self.t_end - self.t_b)))
        };
        sign * v
    }
}

/// A movie realizing the linked cylinder: radius-r2 circle frames centered at
/// (center(t), 0) over t ∈ [-(T+1), T+1], with the clearing base height.
pub fn linked_cylinder_movie(params: &LinkedCylinderParams) -> Result<Movie, MovieError> {
    params.validate()?;
    let sched = params.schedule();
    let extent = params.t_extent + 1.0;
    let nt = params.nt;
    let t_grid: Vec<f64> = (0..nt)
        .map(|j| -extent + 2.0 * extent * j as f64 / (nt - 1) as f64)
        .collect();
    movie_on_grid(params, &sched, &t_grid)
}

/// The same frames and base height on an arbitrary t-grid (used by the
/// close-up, which needs the movie out to |t| = delta).
pub(crate) fn movie_on_grid(
    params: &LinkedCylinderParams,
    sched: &Schedule,
    t_grid: &[f64],
) -> Result<Movie, MovieError> {
    use core::f64::consts::TAU;
    let mut frames = Vec::with_capacity(t_grid.len());
    let mut z0 = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let c = sched.center(t);
        frames.push(SampledCurve2::from_fn(params.ns, |s| {
            [
                c + params.r2 * libm::cos(TAU * s),
                params.r2 * libm::sin(TAU * s),
            ]
        })?);
        z0.push(sched.z0(t));
    }
    Movie::new(t_grid.to_vec(), frames, z0)
}
