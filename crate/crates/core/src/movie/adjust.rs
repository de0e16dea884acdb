//! Area adjustment of loops by a calibrated planar coil.
//!
//! Concatenating a small coil of prescribed signed λ-area at one sample
//! point changes the loop's Liouville integral to any target while staying
//! C⁰-close to the input outside a ball around that point.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::geom::{liouville_integral, Point4, SampledLoop4};

/// Returns a loop whose Liouville integral equals `target` to 1e-8, equal to
/// the input away from a small ball around sample 0. The coil radius is
/// calibrated against the measured quadrature so the tolerance holds exactly
/// as measured.
pub fn adjust_loop_area(input: &SampledLoop4, target: f64) -> SampledLoop4 {
    let current = liouville_integral(input).expect("loop is finite by construction");
    let delta = target - current;
    if libm::fabs(delta) <= 5e-9 {
        return input.clone();
    }
    let scale = loop_scale(input);
    let ball = 0.05 * scale;
    let rho_max = 0.5 * ball;
    let turns = libm::ceil(libm::fabs(delta) / (PI * rho_max * rho_max)).max(1.0) as usize;
    let mut rho = libm::sqrt(libm::fabs(delta) / (turns as f64 * PI));
    let ccw = delta >= 0.0;
    // secant-style calibration of the coil radius against the measured area
    let mut out = build_with_coil(input, rho, turns, ccw, scale);
    for _ in 0..40 {
        let measured = liouville_integral(&out).expect("coil loop finite");
        let err = target - measured;
        if libm::fabs(err) <= 1e-9 {
            break;
        }
        let sign = if ccw { 1.0 } else { -1.0 };
        let slope = 2.0 * sign * turns as f64 * PI * rho;
        rho = (rho + err / slope).max(rho * 0.25);
        out = build_with_coil(input, rho, turns, ccw, scale);
    }
    out
}

fn loop_scale(input: &SampledLoop4) -> f64 {
    let mut lo = [f64::INFINITY; 4];
    let mut hi = [f64::NEG_INFINITY; 4];
    for p in input.samples() {
        let c = p.coords();
        for k in 0..4 {
            lo[k] = lo[k].min(c[k]);
            hi[k] = hi[k].max(c[k]);
        }
    }
    let diag: f64 = libm::sqrt((0..4).map(|k| (hi[k] - lo[k]) * (hi[k] - lo[k])).sum());
    diag.max(1.0)
}

/// Splice `turns` full circles of radius `rho` in the (x1,y1)-plane at sample
/// 0, positively oriented when `ccw`, with a slight y2 drift so successive
/// turns stay disjoint.
fn build_with_coil(
    input: &SampledLoop4,
    rho: f64,
    turns: usize,
    ccw: bool,
    scale: f64,
) -> SampledLoop4 {
    let p0 = input.samples()[0];
    let per_turn = 64usize;
    let total = turns * per_turn;
    let drift = 1e-6 * scale;
    let mut samples: Vec<Point4> = Vec::with_capacity(input.len() + total + 1);
    samples.push(p0);
    // circle through p0 centered one radius to its +x1 side
    let (cx, cy) = (p0.x1 + rho, p0.y1);
    for k in 1..total {
        let frac = k as f64 / total as f64;
        let phase = TAU * k as f64 / per_turn as f64;
        let ang = if ccw { PI + phase } else { PI - phase };
        let bump = drift * libm::sin(PI * frac);
        samples.push(Point4::new(
            cx + rho * libm::cos(ang),
            cy + rho * libm::sin(ang),
            p0.x2,
            p0.y2 + bump,
        ));
    }
    samples.extend_from_slice(&input.samples()[1..]);
    SampledLoop4::new(samples).expect("spliced loop is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_area_pi() -> SampledLoop4 {
        SampledLoop4::from_fn(256, |s| {
            Point4::new(libm::cos(TAU * s), libm::sin(TAU * s), 0.0, 0.0)
        })
        .unwrap()
    }

    #[test]
    fn cancels_area_to_zero() {
        let loop4 = circle_area_pi();
        let out = adjust_loop_area(&loop4, 0.0);
        let a = liouville_integral(&out).unwrap();
        assert!(libm::fabs(a) <= 1e-8, "{a}");
    }

    #[test]
    fn noop_when_target_matches() {
        let loop4 = circle_area_pi();
        let current = liouville_integral(&loop4).unwrap();
        let out = adjust_loop_area(&loop4, current);
        assert_eq!(out.samples().len(), loop4.samples().len());
    }

    #[test]
    fn reaches_negative_target_from_zero_area() {
        // flat zero-area loop spanning the x1 and y2 axes
        let base = SampledLoop4::from_fn(64, |s| {
            Point4::new(libm::cos(TAU * s), 0.0, 0.0, libm::sin(TAU * s))
        })
        .unwrap();
        let a0 = liouville_integral(&base).unwrap();
        assert!(libm::fabs(a0) <= 1e-10, "{a0}");
        let out = adjust_loop_area(&base, -2.0);
        let a = liouville_integral(&out).unwrap();
        assert!(libm::fabs(a + 2.0) <= 1e-8, "{a}");
    }
}
