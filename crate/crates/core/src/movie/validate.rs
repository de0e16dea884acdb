//! Movie validation: per-frame immersion and simplicity, area drift.

use alloc::vec::Vec;

use super::Movie;
use crate::geom::curve::dist_point_segment;
use crate::geom::{plane_liouville_area, SampledCurve2, CONSTANT_REL, IMMERSION_REL};

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub frame_immersed: Vec<bool>,
    pub frame_simple: Vec<bool>,
    pub areas: Vec<f64>,
    pub max_area_drift: f64,
    pub tol_area: f64,
    pub ok: bool,
}

/// Checks the lifting conditions: every frame immersed, every frame simple
/// (no self-intersection within tolerance), and the enclosed λ-area constant
/// across frames. Failures are carried in the report, not raised.
pub fn validate_movie(movie: &Movie, tol_area: Option<f64>) -> ValidationReport {
    let frames = movie.frames();
    let mut frame_immersed = Vec::with_capacity(frames.len());
    let mut frame_simple = Vec::with_capacity(frames.len());
    let mut areas = Vec::with_capacity(frames.len());
    for f in frames {
        frame_immersed.push(is_immersed(f));
        frame_simple.push(is_simple(f));
        areas.push(plane_liouville_area(f).unwrap_or(f64::NAN));
    }
    let a0 = areas[0];
    let max_area_drift = areas
        .iter()
        .map(|a| libm::fabs(a - a0))
        .fold(0.0, f64::max);
    let tol_area = tol_area.unwrap_or_else(|| {
        let diam = frames[0].diameter();
        let scale = libm::fabs(a0).max(diam * diam).max(1e-9);
        1e-6 * scale
    });
    let ok = frame_immersed.iter().all(|&b| b)
        && frame_simple.iter().all(|&b| b)
        && max_area_drift <= tol_area
        && areas.iter().all(|a| a.is_finite());
    ValidationReport {
        frame_immersed,
        frame_simple,
        areas,
        max_area_drift,
        tol_area,
        ok,
    }
}

fn is_immersed(curve: &SampledCurve2) -> bool {
    let diam = curve.diameter();
    curve
        .tangents()
        .iter()
        .all(|t| libm::hypot(t[0], t[1]) >= IMMERSION_REL * diam)
        && diam > 0.0
}

/// No two non-adjacent segments closer than 1e-9 × diameter.
fn is_simple(curve: &SampledCurve2) -> bool {
    let pts = curve.samples();
    let n = pts.len();
    let diam = curve.diameter();
    if diam <= 0.0 {
        return false;
    }
    let tol = (1e-9 * diam).max(CONSTANT_REL * diam);
    for i in 0..n {
        let a0 = pts[i];
        let a1 = pts[(i + 1) % n];
        let (alox, ahix) = (a0[0].min(a1[0]) - tol, a0[0].max(a1[0]) + tol);
        let (aloy, ahiy) = (a0[1].min(a1[1]) - tol, a0[1].max(a1[1]) + tol);
        for j in (i + 2)..n {
            // skip the two cyclically adjacent segments
            if i == 0 && j == n - 1 {
                continue;
            }
            let b0 = pts[j];
            let b1 = pts[(j + 1) % n];
            if b0[0].min(b1[0]) > ahix
                || b0[0].max(b1[0]) < alox
                || b0[1].min(b1[1]) > ahiy
                || b0[1].max(b1[1]) < aloy
            {
                continue;
            }
            if segment_distance(a0, a1, b0, b1) < tol {
                return false;
            }
        }
    }
    true
}

fn segment_distance(a0: [f64; 2], a1: [f64; 2], b0: [f64; 2], b1: [f64; 2]) -> f64 {
    if segments_cross(a0, a1, b0, b1) {
        return 0.0;
    }
    dist_point_segment((a0[0], a0[1]), b0, b1)
        .min(dist_point_segment((a1[0], a1[1]), b0, b1))
        .min(dist_point_segment((b0[0], b0[1]), a0, a1))
        .min(dist_point_segment((b1[0], b1[1]), a0, a1))
}

fn segments_cross(a0: [f64; 2], a1: [f64; 2], b0: [f64; 2], b1: [f64; 2]) -> bool {
    let orient = |p: [f64; 2], q: [f64; 2], r: [f64; 2]| -> f64 {
        (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    };
    let d1 = orient(a0, a1, b0);
    let d2 = orient(a0, a1, b1);
    let d3 = orient(b0, b1, a0);
    let d4 = orient(b0, b1, a1);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}
