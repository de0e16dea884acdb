//! Closed sampled curves in the plane and in R⁴.
//!
//! Samples are read as a uniform parametrization; derivatives come from
//! centered stencils and integrals from the trapezoid rule on the resulting
//! integrand, which is spectrally accurate on smooth periodic data.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::point::Point4;
use super::{GeomError, CONSTANT_REL, IMMERSION_REL};
use crate::numeric::stencil::loop_integral_x_dy;

pub const MIN_SAMPLES: usize = 8;

/// A discretized plane curve, cyclic when `closed`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCurve2 {
    samples: Vec<[f64; 2]>,
    closed: bool,
}

impl SampledCurve2 {
    pub fn new(samples: Vec<[f64; 2]>, closed: bool) -> Result<SampledCurve2, GeomError> {
        if samples.len() < MIN_SAMPLES {
            return Err(GeomError::TooFewSamples {
                min: MIN_SAMPLES,
                got: samples.len(),
            });
        }
        if !samples.iter().all(|p| p[0].is_finite() && p[1].is_finite()) {
            return Err(GeomError::NonFiniteInput);
        }
        Ok(SampledCurve2 { samples, closed })
    }

    /// Uniformly sampled closed curve from a parametrization of [0,1).
    pub fn from_fn(n: usize, f: impl Fn(f64) -> [f64; 2]) -> Result<SampledCurve2, GeomError> {
        let samples = (0..n).map(|i| f(i as f64 / n as f64)).collect();
        SampledCurve2::new(samples, true)
    }

    pub fn samples(&self) -> &[[f64; 2]] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Bounding-box diagonal; the length scale for immersion thresholds.
    pub fn diameter(&self) -> f64 {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &self.samples {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        libm::hypot(hi[0] - lo[0], hi[1] - lo[1])
    }

    /// Discrete tangents by centered differences (cyclic).
    pub fn tangents(&self) -> Vec<[f64; 2]> {
        let n = self.samples.len();
        (0..n)
            .map(|i| {
                let a = self.samples[(i + n - 1) % n];
                let b = self.samples[(i + 1) % n];
                [(b[0] - a[0]) * 0.5, (b[1] - a[1]) * 0.5]
            })
            .collect()
    }

    pub fn translated(&self, dx: f64, dy: f64) -> SampledCurve2 {
        SampledCurve2 {
            samples: self.samples.iter().map(|p| [p[0] + dx, p[1] + dy]).collect(),
            closed: self.closed,
        }
    }

    pub fn reversed(&self) -> SampledCurve2 {
        let mut s = self.samples.clone();
        s.reverse();
        SampledCurve2 {
            samples: s,
            closed: self.closed,
        }
    }
}

/// A closed discretized loop in R⁴ (cyclic by construction).
#[derive(Clone, Debug, PartialEq)]
pub struct SampledLoop4 {
    samples: Vec<Point4>,
}

impl SampledLoop4 {
    pub fn new(samples: Vec<Point4>) -> Result<SampledLoop4, GeomError> {
        if samples.len() < MIN_SAMPLES {
            return Err(GeomError::TooFewSamples {
                min: MIN_SAMPLES,
                got: samples.len(),
            });
        }
        if !samples.iter().all(Point4::is_finite) {
            return Err(GeomError::NonFiniteInput);
        }
        Ok(SampledLoop4 { samples })
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> Point4) -> Result<SampledLoop4, GeomError> {
        SampledLoop4::new((0..n).map(|i| f(i as f64 / n as f64)).collect())
    }

    pub fn samples(&self) -> &[Point4] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn reversed(&self) -> SampledLoop4 {
        let mut s = self.samples.clone();
        s.reverse();
        SampledLoop4 { samples: s }
    }

    pub fn translated(&self, d: [f64; 4]) -> SampledLoop4 {
        SampledLoop4 {
            samples: self
                .samples
                .iter()
                .map(|p| Point4::new(p.x1 + d[0], p.y1 + d[1], p.x2 + d[2], p.y2 + d[3]))
                .collect(),
        }
    }

    /// Projection to the (x1,y1) plane as a closed plane curve.
    pub fn proj1(&self) -> SampledCurve2 {
        SampledCurve2 {
            samples: self.samples.iter().map(|p| [p.x1, p.y1]).collect(),
            closed: true,
        }
    }

    /// Projection to the (x2,y2) plane as a closed plane curve.
    pub fn proj2(&self) -> SampledCurve2 {
        SampledCurve2 {
            samples: self.samples.iter().map(|p| [p.x2, p.y2]).collect(),
            closed: true,
        }
    }
}

/// ∮ x dy over a closed plane curve (the restriction of λ to one symplectic
/// plane): the signed enclosed area.
pub fn plane_liouville_area(curve: &SampledCurve2) -> Result<f64, GeomError> {
    if !curve.is_closed() {
        return Err(GeomError::OpenCurve);
    }
    let x: Vec<f64> = curve.samples().iter().map(|p| p[0]).collect();
    let y: Vec<f64> = curve.samples().iter().map(|p| p[1]).collect();
    Ok(loop_integral_x_dy(&x, &y))
}

/// Winding number of the discrete tangent direction of a closed immersed
/// curve. A constant curve is the single allowed degenerate case and returns
/// 0 by convention.
pub fn rotation_number(curve: &SampledCurve2) -> Result<i64, GeomError> {
    if !curve.is_closed() {
        return Err(GeomError::OpenCurve);
    }
    let diam = curve.diameter();
    let tangents = curve.tangents();
    let speeds: Vec<f64> = tangents.iter().map(|t| libm::hypot(t[0], t[1])).collect();
    if speeds.iter().all(|&s| s <= CONSTANT_REL * diam) {
        return Ok(0);
    }
    if let Some(at) = speeds.iter().position(|&s| s < IMMERSION_REL * diam) {
        return Err(GeomError::NotImmersed { at });
    }
    Ok(winding_of_vectors(&tangents))
}

/// Integer winding of a closed sampled curve around a point not on it.
pub fn winding_number(curve: &SampledCurve2, point: (f64, f64)) -> Result<i64, GeomError> {
    if !curve.is_closed() {
        return Err(GeomError::OpenCurve);
    }
    let diam = curve.diameter();
    let dist = dist_point_to_polygon(curve.samples(), point);
    if dist <= 1e-9 * diam {
        return Err(GeomError::PointOnCurve { dist });
    }
    let rays: Vec<[f64; 2]> = curve
        .samples()
        .iter()
        .map(|p| [p[0] - point.0, p[1] - point.1])
        .collect();
    Ok(winding_of_vectors(&rays))
}

/// Accumulated-angle winding of a cyclic sequence of nonzero vectors.
fn winding_of_vectors(v: &[[f64; 2]]) -> i64 {
    let n = v.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let cross = a[0] * b[1] - a[1] * b[0];
        let dot = a[0] * b[0] + a[1] * b[1];
        total += libm::atan2(cross, dot);
    }
    libm::round(total / TAU) as i64
}

fn dist_point_to_polygon(samples: &[[f64; 2]], point: (f64, f64)) -> f64 {
    let n = samples.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = samples[i];
        let b = samples[(i + 1) % n];
        best = best.min(dist_point_segment(point, a, b));
    }
    best
}

pub(crate) fn dist_point_segment(p: (f64, f64), a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p.0 - a[0]) * dx + (p.1 - a[1]) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    libm::hypot(p.0 - (a[0] + t * dx), p.1 - (a[1] + t * dy))
}
