//! Signed intersection numbers of loops with catalog spanning solid tori,
//! and the resulting π₁-classes and homological linking certificates.
//!
//! The pairing counts transversal zeros of the model's crossing function
//! along the loop, signed by the direction of the crossing, restricted to
//! zeros inside the membership region. A loop's class in π₁(complement) ≅ Z
//! is its intersection number with the chosen generating spanning solid
//! torus; a nonzero class on any basis loop of one torus certifies that the
//! other torus is homologically linked with it.

use alloc::string::String;
use alloc::vec::Vec;

use crate::geom::{Point4, SampledLoop4, SolidTorusModel};
use crate::movie::ClosedUpTorus;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinkError {
    #[error("non-transversal crossing near parameter {t}: {detail}")]
    NonTransversalCrossing { t: f64, detail: String },
    #[error("loop touches the torus (minimum distance {dist:e})")]
    LoopTouchesTorus { dist: f64 },
    #[error("loop leaves the validity box |y2| <= {bound} of the truncated spanning model")]
    OutOfValidityBox { bound: f64 },
}

/// One transversal crossing: cyclic parameter in [0,1), sign, location.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossingRecord {
    pub t: f64,
    pub sign: i64,
    pub location: Point4,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionCount {
    pub total: i64,
    pub crossings: Vec<CrossingRecord>,
}

/// Fraction of the membership scale below which a crossing counts as lying
/// on the membership boundary.
const BOUNDARY_MARGIN_REL: f64 = 1e-8;
/// Parameter tolerance of the crossing bisection.
const BISECTION_TOL: f64 = 1e-10;

fn lerp(a: &Point4, b: &Point4, u: f64) -> Point4 {
    Point4::new(
        a.x1 + (b.x1 - a.x1) * u,
        a.y1 + (b.y1 - a.y1) * u,
        a.x2 + (b.x2 - a.x2) * u,
        a.y2 + (b.y2 - a.y2) * u,
    )
}

/// Signed count of transversal crossings of `loop4` through the spanning
/// solid torus `model`. Positive sign: the crossing function increases
/// through zero.
pub fn intersection_number(
    loop4: &SampledLoop4,
    model: &SolidTorusModel,
) -> Result<IntersectionCount, LinkError> {
    let pts = loop4.samples();
    let n = pts.len();
    let scale = model.scale();
    let deg_tol = 1e-12 * scale;
    let mut crossings = Vec::new();
    for i in 0..n {
        let a = &pts[i];
        let b = &pts[(i + 1) % n];
        let fa = model.crossing_value(a);
        let fb = model.crossing_value(b);
        // samples landing exactly on the crossing set: transversal when the
        // neighbors change sign, degenerate contact otherwise
        if libm::fabs(fa) <= deg_tol {
            let member = model.membership_value(a);
            if member > BOUNDARY_MARGIN_REL * scale {
                let prev = model.crossing_value(&pts[(i + n - 1) % n]);
                if prev * fb < 0.0 {
                    crossings.push(CrossingRecord {
                        t: i as f64 / n as f64,
                        sign: if fb > prev { 1 } else { -1 },
                        location: *a,
                    });
                } else {
                    return Err(LinkError::NonTransversalCrossing {
                        t: i as f64 / n as f64,
                        detail: String::from("crossing function vanishes without a sign change"),
                    });
                }
            } else if member > -BOUNDARY_MARGIN_REL * scale {
                return Err(LinkError::NonTransversalCrossing {
                    t: i as f64 / n as f64,
                    detail: String::from("crossing lies on the membership boundary"),
                });
            }
            continue;
        }
        if fa * fb >= 0.0 {
            continue;
        }
        // bisect the segment for the zero of the crossing function
        let (mut lo, mut hi, mut flo) = (0.0f64, 1.0f64, fa);
        while hi - lo > BISECTION_TOL {
            let mid = 0.5 * (lo + hi);
            let fm = model.crossing_value(&lerp(a, b, mid));
            if flo * fm <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        let u = 0.5 * (lo + hi);
        let p = lerp(a, b, u);
        let t = (i as f64 + u) / n as f64;
        // derivative of the crossing function along the segment
        let slope = fb - fa;
        if libm::fabs(slope) <= deg_tol {
            return Err(LinkError::NonTransversalCrossing {
                t,
                detail: String::from("crossing derivative below tolerance"),
            });
        }
        let member = model.membership_value(&p);
        if libm::fabs(member) <= BOUNDARY_MARGIN_REL * scale {
            return Err(LinkError::NonTransversalCrossing {
                t,
                detail: String::from("crossing lies on the membership boundary"),
            });
        }
        if member > 0.0 {
            crossings.push(CrossingRecord {
                t,
                sign: if slope > 0.0 { 1 } else { -1 },
                location: p,
            });
        }
    }
    let total = crossings.iter().map(|c| c.sign).sum();
    Ok(IntersectionCount { total, crossings })
}

/// The spanning solid torus attached to a torus, with the validity window in
/// which the truncated geometry agrees with the infinite model.
#[derive(Clone, Debug)]
pub struct SpanningModel {
    pub model: SolidTorusModel,
    /// Loops must stay within |y2| <= bound when present.
    pub y2_bound: Option<f64>,
    /// Grid points of the torus, for the disjointness precondition.
    torus_points: Vec<Point4>,
}

impl SpanningModel {
    /// The product torus |z1| = |z2| = r spanned by its second-factor solid
    /// torus, the recorded generator of the intersection pairing.
    pub fn clifford(r: f64) -> SpanningModel {
        use core::f64::consts::TAU;
        let model = SolidTorusModel::clifford_spanning(r, 2).expect("radius positive");
        let n = 64;
        let mut torus_points = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (TAU * i as f64 / n as f64, TAU * j as f64 / n as f64);
                torus_points.push(Point4::new(
                    r * libm::cos(a),
                    r * libm::sin(a),
                    r * libm::cos(b),
                    r * libm::sin(b),
                ));
            }
        }
        SpanningModel {
            model,
            y2_bound: None,
            torus_points,
        }
    }

    /// A closed-up torus over a static standard cylinder is spanned, inside
    /// |y2| <= delta - 1, by the planar solid cylinder of its core disk.
    /// Returns None when the torus has a genuine movie band, for which no
    /// catalog model applies.
    pub fn closed_up(torus: &ClosedUpTorus) -> Option<SpanningModel> {
        let (a, b, r) = torus.static_core?;
        let model = SolidTorusModel::planar_disk_cylinder(a, b, r).expect("radius positive");
        Some(SpanningModel {
            model,
            y2_bound: Some(torus.delta - 1.0),
            torus_points: torus.surface.grid().to_vec(),
        })
    }

    /// Planar solid cylinder over an arbitrary disk, trusted on all of R⁴.
    pub fn planar(a: f64, b: f64, r: f64) -> SpanningModel {
        SpanningModel {
            model: SolidTorusModel::planar_disk_cylinder(a, b, r).expect("radius positive"),
            y2_bound: None,
            torus_points: Vec::new(),
        }
    }
}

/// The integer class of a loop in π₁ of the torus complement, computed as
/// its intersection number with the spanning solid torus.
pub fn pi1_class(loop4: &SampledLoop4, spanning: &SpanningModel) -> Result<i64, LinkError> {
    if let Some(bound) = spanning.y2_bound {
        let worst = loop4
            .samples()
            .iter()
            .map(|p| libm::fabs(p.y2))
            .fold(0.0f64, f64::max);
        if worst > bound {
            return Err(LinkError::OutOfValidityBox { bound });
        }
    }
    if !spanning.torus_points.is_empty() {
        let mut dist = f64::INFINITY;
        for p in loop4.samples() {
            for q in &spanning.torus_points {
                dist = dist.min(p.dist(q));
            }
        }
        let tol = 1e-6 * spanning.model.scale();
        if dist <= tol {
            return Err(LinkError::LoopTouchesTorus { dist });
        }
    }
    intersection_number(loop4, &spanning.model).map(|c| c.total)
}

#[derive(Clone, Debug)]
pub struct LinkingCertificate {
    pub linked: bool,
    /// Index of the witnessing basis loop and its class, when linked.
    pub witness: Option<(usize, i64)>,
    pub classes: Vec<i64>,
}

/// Certifies homological linking: the first torus is homologically linked
/// with the owner of the basis loops whenever some basis loop carries a
/// nonzero class in the complement of the first torus.
pub fn homological_linking_certificate(
    spanning_of_l1: &SpanningModel,
    l2_basis: &[SampledLoop4],
) -> Result<LinkingCertificate, LinkError> {
    let mut classes = Vec::with_capacity(l2_basis.len());
    for loop4 in l2_basis {
        classes.push(pi1_class(loop4, spanning_of_l1)?);
    }
    let witness = classes
        .iter()
        .enumerate()
        .find(|&(_, &c)| c != 0)
        .map(|(i, &c)| (i, c));
    Ok(LinkingCertificate {
        linked: witness.is_some(),
        witness,
        classes,
    })
}

#[cfg(test)]
mod tests;
