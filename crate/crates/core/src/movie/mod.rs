//! Lagrangian movies: one-parameter families of plane curves with constant
//! enclosed λ-area, their lifts to Lagrangian cylinders, the linked-cylinder
//! construction, and the close-up gluing that produces linked torus pairs.

mod adjust;
mod closeup;
mod lift;
mod linked;
mod validate;

pub use adjust::adjust_loop_area;
pub use closeup::{
    close_up, close_up_standard_cylinder, flat_disk_family, CloseUpParams, ClosedUpTorus, FlatDisk,
};
pub use lift::{lift, lift_with_report, LiftReport};
pub use linked::{linked_cylinder_movie, LinkedCylinderParams};
pub use validate::{validate_movie, ValidationReport};

use alloc::string::String;
use alloc::vec::Vec;

use crate::geom::{GeomError, SampledCurve2};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MovieError {
    #[error("movie failed validation: {reason}")]
    MovieInvalid { reason: String },
    #[error("s-closure defect {defect:e} exceeds tolerance {tol:e}; frame areas drift in t")]
    ClosureDefectExceeded { defect: f64, tol: f64 },
    #[error("bad construction parameters: {0}")]
    BadParams(String),
    #[error("alpha = {alpha} too small; needs to exceed {min} (the meridian disk area)")]
    AlphaTooSmall { alpha: f64, min: f64 },
    #[error("delta = {delta} too small; needs at least {min} so the tails are standard")]
    DeltaTooSmall { delta: f64, min: f64 },
    #[error("height {given} is not one of the two stored flat-disk heights")]
    BadHeight { given: f64 },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A t-indexed family of closed plane curves plus the base height z(0, t).
///
/// Lifts to a Lagrangian cylinder when every frame is immersed and the
/// enclosed λ-area is constant in t.
#[derive(Clone, Debug)]
pub struct Movie {
    t_grid: Vec<f64>,
    frames: Vec<SampledCurve2>,
    z0: Vec<f64>,
}

impl Movie {
    pub fn new(
        t_grid: Vec<f64>,
        frames: Vec<SampledCurve2>,
        z0: Vec<f64>,
    ) -> Result<Movie, MovieError> {
        if t_grid.len() != frames.len() || t_grid.len() != z0.len() {
            return Err(MovieError::BadParams(String::from(
                "t_grid, frames and z0 must have equal length",
            )));
        }
        if t_grid.len() < 8 {
            return Err(MovieError::BadParams(String::from("need at least 8 frames")));
        }
        if !t_grid.windows(2).all(|w| w[1] > w[0]) {
            return Err(MovieError::BadParams(String::from(
                "t_grid must be strictly increasing",
            )));
        }
        if !t_grid.iter().chain(z0.iter()).all(|v| v.is_finite()) {
            return Err(MovieError::BadParams(String::from("non-finite t or z0")));
        }
        let ns = frames[0].len();
        if !frames.iter().all(|f| f.is_closed() && f.len() == ns) {
            return Err(MovieError::BadParams(String::from(
                "frames must be closed with a common sample count",
            )));
        }
        Ok(Movie { t_grid, frames, z0 })
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn frames(&self) -> &[SampledCurve2] {
        &self.frames
    }

    pub fn z0(&self) -> &[f64] {
        &self.z0
    }

    pub fn frame_samples(&self) -> usize {
        self.frames[0].len()
    }
}

/// Quintic smoothstep: zero first and second derivatives at both endpoints.
pub(crate) fn smoothstep(u: f64) -> f64 {
    let u = u.clamp(0.0, 1.0);
    u * u * u * (10.0 + u * (-15.0 + 6.0 * u))
}
