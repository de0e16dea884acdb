//! Lifting a validated movie to a Lagrangian cylinder.
//!
//! The height is reconstructed from the discrete form of z_s = -(x_s·y_t -
//! x_t·y_s): t-derivatives of the frame data come from 5-point stencils on
//! the movie's t-grid, the s-integral is the corrected cumulative trapezoid.
//! Using the same discrete operators for construction and for the residual
//! makes the reported lagrangian_defect the honest composition error, fourth
//! order in the s-resolution.

use alloc::format;
use alloc::vec::Vec;

use super::{Movie, MovieError};
use crate::geom::{LagrangianSurface, Point4, SurfaceKind};
use crate::movie::validate::validate_movie;
use crate::numeric::stencil::{cumulative_cyclic, deriv_cyclic_4, deriv_nodes};

#[derive(Clone, Debug)]
pub struct LiftReport {
    /// max over t of |z(1,t) - z(0,t)| before the closing ramp.
    pub closure_defect: f64,
    pub closure_tol: f64,
}

/// Lift a movie to the Lagrangian cylinder φ(s,t) = (x, y, z, t).
pub fn lift(movie: &Movie) -> Result<LagrangianSurface, MovieError> {
    lift_with_report(movie).map(|(s, _)| s)
}

pub fn lift_with_report(movie: &Movie) -> Result<(LagrangianSurface, LiftReport), MovieError> {
    let report = validate_movie(movie, None);
    if !report.ok {
        let bad_frame = report
            .frame_immersed
            .iter()
            .zip(report.frame_simple.iter())
            .position(|(&im, &si)| !im || !si);
        let reason = match bad_frame {
            Some(j) => format!("frame {j} not immersed or not simple"),
            None => format!(
                "area drift {:e} exceeds {:e}",
                report.max_area_drift, report.tol_area
            ),
        };
        return Err(MovieError::MovieInvalid { reason });
    }
    lift_unchecked(movie)
}

/// Lift without the validity gate; the closure defect still acts as the
/// discrete form of the constant-area constraint.
pub(crate) fn lift_unchecked(
    movie: &Movie,
) -> Result<(LagrangianSurface, LiftReport), MovieError> {
    let (grid, ns, nt, closure) = lift_grid(movie);
    let max_z = grid
        .iter()
        .map(|p| libm::fabs(p.x2))
        .fold(0.0f64, f64::max);
    let frame_scale = movie.frames()[0].diameter();
    let tol = 1e-6 * max_z.max(frame_scale).max(1e-6);
    if closure > tol {
        return Err(MovieError::ClosureDefectExceeded {
            defect: closure,
            tol,
        });
    }
    let surface = LagrangianSurface::from_grid(
        grid,
        ns,
        nt,
        SurfaceKind::Cylinder,
        Some((movie.t_grid().to_vec(), 0.0)),
    )?;
    Ok((
        surface,
        LiftReport {
            closure_defect: closure,
            closure_tol: tol,
        },
    ))
}

/// Shared with the close-up construction: build the (ns × nt) point grid of
/// the lift and return the worst s-closure defect.
pub(crate) fn lift_grid(movie: &Movie) -> (Vec<Point4>, usize, usize, f64) {
    let ns = movie.frame_samples();
    let nt = movie.t_grid().len();
    let hs = 1.0 / ns as f64;
    let frames = movie.frames();
    // x_t, y_t per s-row across the t-grid
    let mut xt = alloc::vec![0.0; ns * nt];
    let mut yt = alloc::vec![0.0; ns * nt];
    let mut row_x = alloc::vec![0.0; nt];
    let mut row_y = alloc::vec![0.0; nt];
    for i in 0..ns {
        for j in 0..nt {
            row_x[j] = frames[j].samples()[i][0];
            row_y[j] = frames[j].samples()[i][1];
        }
        let dx = deriv_nodes(&row_x, movie.t_grid());
        let dy = deriv_nodes(&row_y, movie.t_grid());
        for j in 0..nt {
            xt[i * nt + j] = dx[j];
            yt[i * nt + j] = dy[j];
        }
    }
    let mut grid = alloc::vec![Point4::new(0.0, 0.0, 0.0, 0.0); ns * nt];
    let mut closure = 0.0f64;
    let mut g = alloc::vec![0.0; ns];
    for j in 0..nt {
        let pts = frames[j].samples();
        let xs_col: Vec<f64> = (0..ns).map(|i| pts[i][0]).collect();
        let ys_col: Vec<f64> = (0..ns).map(|i| pts[i][1]).collect();
        let dxs = deriv_cyclic_4(&xs_col, hs);
        let dys = deriv_cyclic_4(&ys_col, hs);
        for i in 0..ns {
            g[i] = -(dxs[i] * yt[i * nt + j] - xt[i * nt + j] * dys[i]);
        }
        let (zcum, total) = cumulative_cyclic(&g, hs);
        closure = closure.max(libm::fabs(total));
        let t = movie.t_grid()[j];
        let z0 = movie.z0()[j];
        for i in 0..ns {
            // distribute the seam jump linearly so the grid is cyclic in s
            let z = z0 + zcum[i] - total * (i as f64 * hs);
            grid[i * nt + j] = Point4::new(pts[i][0], pts[i][1], z, t);
        }
    }
    (grid, ns, nt, closure)
}
