//! Samplers for the standard tori and the catalog of spanning solid tori.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::point::Point4;
use super::surface::{LagrangianSurface, SurfaceKind};
use super::GeomError;

/// The product torus |z1| = |z2| = r as an (n × n) grid.
///
/// The grid is exactly Lagrangian; the reported defect is pure rounding.
pub fn sample_clifford(r: f64, n: usize) -> Result<LagrangianSurface, GeomError> {
    if !(r > 0.0) {
        return Err(GeomError::NonPositiveRadius);
    }
    let mut grid = Vec::with_capacity(n * n);
    for i in 0..n {
        let s = TAU * i as f64 / n as f64;
        let (x1, y1) = (r * libm::cos(s), r * libm::sin(s));
        for j in 0..n {
            let t = TAU * j as f64 / n as f64;
            grid.push(Point4::new(x1, y1, r * libm::cos(t), r * libm::sin(t)));
        }
    }
    LagrangianSurface::from_grid(grid, n, n, SurfaceKind::Torus, None)
}

/// The standard exotic monotone torus: (x, y) runs over the circle
/// x² + y² = r² (s-direction) and θ over [0, 2π) (t-direction), mapped to
/// ((eˣ + i·e⁻ˣ·y)·cos θ, (eˣ + i·e⁻ˣ·y)·sin θ) in C².
///
/// Unlike the product torus this grid is only numerically Lagrangian; the
/// residual shrinks at fourth order under refinement.
pub fn sample_chekanov(r: f64, n: usize) -> Result<LagrangianSurface, GeomError> {
    if !(r > 0.0) {
        return Err(GeomError::NonPositiveRadius);
    }
    let mut grid = Vec::with_capacity(n * n);
    for i in 0..n {
        let s = TAU * i as f64 / n as f64;
        let (x, y) = (r * libm::cos(s), r * libm::sin(s));
        let u1 = libm::exp(x);
        let u2 = libm::exp(-x) * y;
        for j in 0..n {
            let th = TAU * j as f64 / n as f64;
            let (c, sn) = (libm::cos(th), libm::sin(th));
            grid.push(Point4::new(u1 * c, u2 * c, u1 * sn, u2 * sn));
        }
    }
    LagrangianSurface::from_grid(grid, n, n, SurfaceKind::Torus, None)
}

/// Catalog spanning solid tori used by the intersection pairing.
///
/// Co-orientation convention: a crossing is positive when the crossing
/// function increases through zero along the loop.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SolidTorusModel {
    /// {(x1-a)² + (y1-b)² ≤ r², x2 = 0}, y2 free: the solid cylinder over a
    /// planar disk. Crossing function x2, membership the open disk.
    PlanarDiskCylinder { a: f64, b: f64, r: f64 },
    /// Spanning solid torus of the product torus |z1| = |z2| = r. For
    /// `which_factor = 2` it is {|z1| ≤ r, |z2| = r}: crossing function
    /// |z2| - r with membership |z1| < r; `which_factor = 1` swaps the roles.
    CliffordSpanning { r: f64, which_factor: u8 },
}

impl SolidTorusModel {
    pub fn planar_disk_cylinder(a: f64, b: f64, r: f64) -> Result<SolidTorusModel, GeomError> {
        if !(r > 0.0) {
            return Err(GeomError::NonPositiveRadius);
        }
        Ok(SolidTorusModel::PlanarDiskCylinder { a, b, r })
    }

    pub fn clifford_spanning(r: f64, which_factor: u8) -> Result<SolidTorusModel, GeomError> {
        if !(r > 0.0) {
            return Err(GeomError::NonPositiveRadius);
        }
        assert!(which_factor == 1 || which_factor == 2, "factor is 1 or 2");
        Ok(SolidTorusModel::CliffordSpanning { r, which_factor })
    }

    /// Signed function whose transversal zeros, inside the membership region,
    /// are the crossings counted by the pairing.
    pub fn crossing_value(&self, p: &Point4) -> f64 {
        match self {
            SolidTorusModel::PlanarDiskCylinder { .. } => p.x2,
            SolidTorusModel::CliffordSpanning { r, which_factor } => {
                if *which_factor == 2 {
                    libm::hypot(p.x2, p.y2) - r
                } else {
                    libm::hypot(p.x1, p.y1) - r
                }
            }
        }
    }

    /// Positive strictly inside the membership region, negative outside.
    pub fn membership_value(&self, p: &Point4) -> f64 {
        match self {
            SolidTorusModel::PlanarDiskCylinder { a, b, r } => {
                r - libm::hypot(p.x1 - a, p.y1 - b)
            }
            SolidTorusModel::CliffordSpanning { r, which_factor } => {
                if *which_factor == 2 {
                    r - libm::hypot(p.x1, p.y1)
                } else {
                    r - libm::hypot(p.x2, p.y2)
                }
            }
        }
    }

    /// Length scale for boundary-margin tests.
    pub fn scale(&self) -> f64 {
        match self {
            SolidTorusModel::PlanarDiskCylinder { r, .. } => *r,
            SolidTorusModel::CliffordSpanning { r, .. } => *r,
        }
    }
}
