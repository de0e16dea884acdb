//! Points of the standard symplectic R⁴ and the Liouville loop integral.
//!
//! Coordinates are (x1, y1, x2, y2) with ω = dx1∧dy1 + dx2∧dy2 and Liouville
//! primitive λ = x1·dy1 + x2·dy2, so dλ = ω and loop integrals of λ compute
//! symplectic areas of disk classes by Stokes.

use alloc::vec::Vec;

use super::{GeomError, SampledLoop4};
use crate::numeric::stencil::loop_integral_x_dy;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point4 {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl Point4 {
    pub fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Point4 {
        Point4 { x1, y1, x2, y2 }
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.y1.is_finite() && self.x2.is_finite() && self.y2.is_finite()
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }

    pub fn dist(&self, other: &Point4) -> f64 {
        let d = [
            self.x1 - other.x1,
            self.y1 - other.y1,
            self.x2 - other.x2,
            self.y2 - other.y2,
        ];
        libm::sqrt(d.iter().map(|v| v * v).sum())
    }
}

/// ω(u, v) for tangent vectors u, v given as coordinate 4-tuples.
pub fn omega(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]
}

/// ∮ λ over a closed sampled loop, λ = x1·dy1 + x2·dy2.
///
/// For a loop bounding a disk class on a Lagrangian this equals the
/// symplectic area ω of that class.
pub fn liouville_integral(sloop: &SampledLoop4) -> Result<f64, GeomError> {
    if !sloop.samples().iter().all(Point4::is_finite) {
        return Err(GeomError::NonFiniteInput);
    }
    let x1: Vec<f64> = sloop.samples().iter().map(|p| p.x1).collect();
    let y1: Vec<f64> = sloop.samples().iter().map(|p| p.y1).collect();
    let x2: Vec<f64> = sloop.samples().iter().map(|p| p.x2).collect();
    let y2: Vec<f64> = sloop.samples().iter().map(|p| p.y2).collect();
    Ok(loop_integral_x_dy(&x1, &y1) + loop_integral_x_dy(&x2, &y2))
}
