//! Exact rationals, symplectic areas as rational multiples of π, and the
//! finite-difference / quadrature kernels shared by the geometry modules.

mod area;
mod rational;
pub mod stencil;

pub use area::Area;
pub use rational::Rational;

/// Relative tolerance used when comparing floating-point areas.
pub const REL_TOL: f64 = 1e-12;

/// `|a - b| <= tol * max(|a|, |b|, floor)` with `floor = 1`.
pub fn approx_eq_rel(a: f64, b: f64, tol: f64) -> bool {
    let scale = libm::fabs(a).max(libm::fabs(b)).max(1.0);
    libm::fabs(a - b) <= tol * scale
}
