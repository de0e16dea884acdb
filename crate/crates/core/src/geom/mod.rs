//! Discretized curves and surfaces in R⁴ with the standard symplectic
//! structure, Liouville quadrature, winding/rotation numbers, Maslov indices
//! of loops on Lagrangian surfaces, and samplers for the standard tori.

pub(crate) mod curve;
pub(crate) mod point;
pub(crate) mod sampler;
pub(crate) mod surface;

pub use curve::{
    plane_liouville_area, rotation_number, winding_number, SampledCurve2, SampledLoop4,
};
pub use point::{liouville_integral, omega, Point4};
pub use sampler::{sample_chekanov, sample_clifford, SolidTorusModel};
pub use surface::{maslov_index, GridPath, LagrangianSurface, SurfaceKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("input contains a non-finite coordinate")]
    NonFiniteInput,
    #[error("operation requires a closed curve")]
    OpenCurve,
    #[error("curve is not immersed: discrete speed below threshold at sample {at}")]
    NotImmersed { at: usize },
    #[error("query point lies on the curve (distance {dist:e})")]
    PointOnCurve { dist: f64 },
    #[error("tangent frame degenerate at path step {at} (gram determinant {gram:e})")]
    DegenerateFrame { at: usize, gram: f64 },
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("consecutive samples coincide at index {at}")]
    DuplicateSample { at: usize },
    #[error("grid path must be a closed loop on the surface")]
    BadGridPath,
    #[error("frame turns {jump:.2} rad across path step {at}: too coarse for a reliable winding")]
    PathStepTooLarge { at: usize, jump: f64 },
}

/// Immersion threshold: discrete speed at least this multiple of the diameter.
pub const IMMERSION_REL: f64 = 1e-8;
/// Below this multiple of the diameter everywhere, a curve counts as constant.
pub const CONSTANT_REL: f64 = 1e-12;
/// Relative tolerance on the Hermitian Gram determinant of a tangent frame.
pub const GRAM_TOL: f64 = 1e-10;
