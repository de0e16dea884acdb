//! Sampled Lagrangian surfaces: grids in R⁴ with a measured symplectic
//! residual, and the Maslov index of grid loops via the winding of the
//! squared determinant of a unitarized tangent frame.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::point::{omega, Point4};
use super::{GeomError, SampledLoop4, GRAM_TOL};
use crate::numeric::stencil::fornberg_weights;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Cyclic in s, bounded in t.
    Cylinder,
    /// Cyclic in both directions.
    Torus,
}

/// A closed path of grid indices `(i_s, j_t)`; the last step wraps to the first.
pub type GridPath = Vec<(usize, usize)>;

/// Sampled map (s,t) → R⁴ with residual metadata.
///
/// The grid is cyclic in s; cyclic in t for tori, bounded in t for truncated
/// cylinders. `lagrangian_defect` is max |ω(∂_s φ, ∂_t φ)| over the grid with
/// derivatives from the crate's centered stencils, so it is the honest
/// residual of the discrete Lagrangian equation.
#[derive(Clone, Debug)]
pub struct LagrangianSurface {
    grid: Vec<Point4>,
    ns: usize,
    nt: usize,
    kind: SurfaceKind,
    /// Per-column parameter values when the t-sampling is not uniform
    /// (piecewise sections of a closed-up torus); paired with the period.
    t_values: Option<(Vec<f64>, f64)>,
    lagrangian_defect: f64,
    embedded_certificate: bool,
}

impl LagrangianSurface {
    /// Build from a flat grid in row-major (i_s, j_t) order and compute the
    /// symplectic residual and the embeddedness sanity certificate.
    pub fn from_grid(
        grid: Vec<Point4>,
        ns: usize,
        nt: usize,
        kind: SurfaceKind,
        t_values: Option<(Vec<f64>, f64)>,
    ) -> Result<LagrangianSurface, GeomError> {
        if ns < 8 || nt < 8 || grid.len() != ns * nt {
            return Err(GeomError::TooFewSamples {
                min: 8,
                got: ns.min(nt),
            });
        }
        if !grid.iter().all(Point4::is_finite) {
            return Err(GeomError::NonFiniteInput);
        }
        if let Some((tv, _)) = &t_values {
            assert_eq!(tv.len(), nt, "one parameter value per t-column");
        }
        let mut surf = LagrangianSurface {
            grid,
            ns,
            nt,
            kind,
            t_values,
            lagrangian_defect: 0.0,
            embedded_certificate: false,
        };
        surf.lagrangian_defect = surf.compute_defect();
        surf.embedded_certificate = surf.check_embedded();
        Ok(surf)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.ns, self.nt)
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn point(&self, i: usize, j: usize) -> Point4 {
        self.grid[i * self.nt + j]
    }

    pub fn grid(&self) -> &[Point4] {
        &self.grid
    }

    pub fn t_values(&self) -> Option<&(Vec<f64>, f64)> {
        self.t_values.as_ref()
    }

    pub fn lagrangian_defect(&self) -> f64 {
        self.lagrangian_defect
    }

    pub fn embedded_certificate(&self) -> bool {
        self.embedded_certificate
    }

    /// The s-loop (meridian direction) at t-column `j`.
    pub fn s_loop(&self, j: usize) -> SampledLoop4 {
        let samples = (0..self.ns).map(|i| self.point(i, j)).collect();
        SampledLoop4::new(samples).expect("grid row is a valid loop")
    }

    /// The t-loop at s-row `i`; only closed for tori.
    pub fn t_loop(&self, i: usize) -> Option<SampledLoop4> {
        if self.kind != SurfaceKind::Torus {
            return None;
        }
        let samples = (0..self.nt).map(|j| self.point(i, j)).collect();
        Some(SampledLoop4::new(samples).expect("grid column is a valid loop"))
    }

    /// Grid path of the s-loop at column `j`.
    pub fn s_loop_path(&self, j: usize) -> GridPath {
        (0..self.ns).map(|i| (i, j)).collect()
    }

    /// One node per t-column of the k-diagonal: the plain parametrization
    /// of the loop that `diagonal_path` refines.
    pub fn diagonal_nodes(&self, k: i64) -> GridPath {
        (0..self.nt)
            .map(|j| {
                let shift = (k * j as i64 * self.ns as i64) / self.nt as i64;
                ((shift.rem_euclid(self.ns as i64)) as usize, j)
            })
            .collect()
    }

    /// Grid path winding `k` times in s while going once around t (torus),
    /// staircased so every step moves a single index.
    pub fn diagonal_path(&self, k: i64) -> GridPath {
        let mut path = Vec::new();
        let mut prev_shift = 0i64;
        for j in 0..self.nt {
            let shift = (k * j as i64 * self.ns as i64) / self.nt as i64;
            let step = if k >= 0 { 1 } else { -1 };
            while prev_shift != shift {
                path.push(((prev_shift.rem_euclid(self.ns as i64)) as usize, j));
                prev_shift += step;
            }
            path.push(((shift.rem_euclid(self.ns as i64)) as usize, j));
        }
        path
    }

    /// 5-point stencil (column indices and weights) for the t-derivative at
    /// column `j`, honoring stored parameter values and cyclicity.
    fn t_stencil(&self, j: usize) -> ([usize; 5], [f64; 5]) {
        let nt = self.nt;
        let mut cols = [0usize; 5];
        let mut nodes = [0.0f64; 5];
        match self.kind {
            SurfaceKind::Torus => {
                let (tv, period) = match &self.t_values {
                    Some((tv, p)) => (Some(tv), *p),
                    None => (None, 1.0),
                };
                for (k, off) in (-2i64..=2).enumerate() {
                    let raw = j as i64 + off;
                    let jj = raw.rem_euclid(nt as i64) as usize;
                    cols[k] = jj;
                    let base = match tv {
                        Some(tv) => tv[jj],
                        None => jj as f64 / nt as f64,
                    };
                    nodes[k] = if raw < 0 {
                        base - period
                    } else if raw >= nt as i64 {
                        base + period
                    } else {
                        base
                    };
                }
                let z = match tv {
                    Some(tv) => tv[j],
                    None => j as f64 / nt as f64,
                };
                let w = fornberg_weights(z, &nodes, 1);
                (cols, [w[0], w[1], w[2], w[3], w[4]])
            }
            SurfaceKind::Cylinder => {
                let lo = j.saturating_sub(2).min(nt - 5);
                for k in 0..5 {
                    cols[k] = lo + k;
                    nodes[k] = match &self.t_values {
                        Some((tv, _)) => tv[lo + k],
                        None => (lo + k) as f64 / nt as f64,
                    };
                }
                let z = match &self.t_values {
                    Some((tv, _)) => tv[j],
                    None => j as f64 / nt as f64,
                };
                let w = fornberg_weights(z, &nodes, 1);
                (cols, [w[0], w[1], w[2], w[3], w[4]])
            }
        }
    }

    fn s_deriv(&self, i: usize, j: usize) -> [f64; 4] {
        let ns = self.ns;
        let h = 1.0 / ns as f64;
        let g = |ii: usize| self.point(ii, j).coords();
        let m2 = g((i + ns - 2) % ns);
        let m1 = g((i + ns - 1) % ns);
        let p1 = g((i + 1) % ns);
        let p2 = g((i + 2) % ns);
        let mut out = [0.0; 4];
        for k in 0..4 {
            out[k] = (m2[k] - 8.0 * m1[k] + 8.0 * p1[k] - p2[k]) / (12.0 * h);
        }
        out
    }

    fn t_deriv_with(&self, i: usize, j: usize, cols: &[usize; 5], w: &[f64; 5]) -> [f64; 4] {
        // differences against the evaluation point keep constant-in-t data
        // at an exact zero derivative
        let center = self.point(i, j).coords();
        let mut out = [0.0; 4];
        for k in 0..5 {
            let c = self.point(i, cols[k]).coords();
            for m in 0..4 {
                out[m] += w[k] * (c[m] - center[m]);
            }
        }
        out
    }

    /// Tangent frame {∂_s φ, ∂_t φ} at a grid point.
    pub fn frame(&self, i: usize, j: usize) -> ([f64; 4], [f64; 4]) {
        let (cols, w) = self.t_stencil(j);
        (self.s_deriv(i, j), self.t_deriv_with(i, j, &cols, &w))
    }

    fn compute_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for j in 0..self.nt {
            let (cols, w) = self.t_stencil(j);
            for i in 0..self.ns {
                let ds = self.s_deriv(i, j);
                let dt = self.t_deriv_with(i, j, &cols, &w);
                worst = worst.max(libm::fabs(omega(&ds, &dt)));
            }
        }
        worst
    }

    /// Coarse self-intersection sanity check: subsample the grid and flag any
    /// pair of index-distant points closer than a fraction of the local
    /// neighbor spacing.
    fn check_embedded(&self) -> bool {
        let stride_s = self.ns.div_ceil(64).max(1);
        let stride_t = self.nt.div_ceil(64).max(1);
        let is_cyclic_t = self.kind == SurfaceKind::Torus;
        let mut pts: Vec<(usize, usize, Point4, f64)> = Vec::new();
        for i in (0..self.ns).step_by(stride_s) {
            for j in (0..self.nt).step_by(stride_t) {
                let p = self.point(i, j);
                let nb_s = self.point((i + 1) % self.ns, j);
                let nb_t = self.point(i, (j + 1) % self.nt);
                let local = p.dist(&nb_s).min(p.dist(&nb_t)).max(1e-12);
                pts.push((i, j, p, local));
            }
        }
        let sep_s = 3 * stride_s;
        let sep_t = 3 * stride_t;
        for a in 0..pts.len() {
            for b in (a + 1)..pts.len() {
                let (ia, ja, pa, la) = &pts[a];
                let (ib, jb, pb, lb) = &pts[b];
                let mut di = ia.abs_diff(*ib);
                di = di.min(self.ns - di);
                let mut dj = ja.abs_diff(*jb);
                if is_cyclic_t {
                    dj = dj.min(self.nt - dj);
                }
                if di <= sep_s && dj <= sep_t {
                    continue;
                }
                if pa.dist(pb) < 0.25 * la.min(*lb) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
struct Cpx {
    re: f64,
    im: f64,
}

impl Cpx {
    fn new(re: f64, im: f64) -> Cpx {
        Cpx { re, im }
    }
    fn conj(self) -> Cpx {
        Cpx::new(self.re, -self.im)
    }
    fn mul(self, o: Cpx) -> Cpx {
        Cpx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn sub(self, o: Cpx) -> Cpx {
        Cpx::new(self.re - o.re, self.im - o.im)
    }
    fn scale(self, k: f64) -> Cpx {
        Cpx::new(self.re * k, self.im * k)
    }
    fn norm_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

/// Hermitian inner product on C²: ⟨a, b⟩ = a1·conj(b1) + a2·conj(b2).
fn herm(a: &[Cpx; 2], b: &[Cpx; 2]) -> Cpx {
    let t0 = a[0].mul(b[0].conj());
    let t1 = a[1].mul(b[1].conj());
    Cpx::new(t0.re + t1.re, t0.im + t1.im)
}

fn as_c2(v: &[f64; 4]) -> [Cpx; 2] {
    [Cpx::new(v[0], v[1]), Cpx::new(v[2], v[3])]
}

/// Determinant of the unitarized frame, as a unit complex number. Since the
/// frame fields ∂_s φ, ∂_t φ are single-valued on the grid, this determinant
/// is a continuous closed path along any closed grid loop.
fn unit_det(step: usize, u4: &[f64; 4], v4: &[f64; 4]) -> Result<Cpx, GeomError> {
    let u = as_c2(u4);
    let v = as_c2(v4);
    let nu = herm(&u, &u).re;
    let nv = herm(&v, &v).re;
    let uv = herm(&v, &u);
    let gram = nu * nv - uv.norm_sq();
    if !(gram > GRAM_TOL * nu * nv) {
        return Err(GeomError::DegenerateFrame {
            at: step,
            gram: gram / (nu * nv).max(f64::MIN_POSITIVE),
        });
    }
    let inv = 1.0 / libm::sqrt(nu);
    let e1 = [u[0].scale(inv), u[1].scale(inv)];
    let c = herm(&v, &e1);
    let w = [v[0].sub(c.mul(e1[0])), v[1].sub(c.mul(e1[1]))];
    let nw = libm::sqrt(herm(&w, &w).re);
    let e2 = [w[0].scale(1.0 / nw), w[1].scale(1.0 / nw)];
    let det = e1[0].mul(e2[1]).sub(e1[1].mul(e2[0]));
    let m = libm::sqrt(det.norm_sq());
    Ok(det.scale(1.0 / m))
}

/// Largest per-step turn of the determinant path that still identifies the
/// winding reliably (safely below π).
const MAX_DET_STEP: f64 = 2.5;

/// Maslov index of a closed grid path on a Lagrangian surface.
///
/// The tangent frame {∂_s φ, ∂_t φ} is orthonormalized in the Hermitian
/// inner product of C² ≅ R⁴ and the index is the winding number of the
/// squared determinant of the resulting unitary frame. The determinant path
/// itself is closed here because the frame fields are single-valued, so the
/// index is computed as twice the determinant winding, which tolerates twice
/// the sampling step. Even for orientable surfaces by construction.
pub fn maslov_index(surface: &LagrangianSurface, path: &[(usize, usize)]) -> Result<i64, GeomError> {
    if path.len() < 3 {
        return Err(GeomError::BadGridPath);
    }
    let (ns, nt) = surface.dims();
    if path.iter().any(|&(i, j)| i >= ns || j >= nt) {
        return Err(GeomError::BadGridPath);
    }
    let mut args = Vec::with_capacity(path.len() + 1);
    for (step, &(i, j)) in path.iter().enumerate() {
        let (ds, dt) = surface.frame(i, j);
        args.push(unit_det(step, &ds, &dt)?);
    }
    let mut total = 0.0;
    for k in 0..args.len() {
        let a = args[k];
        let b = args[(k + 1) % args.len()];
        // arg(b / a) via the cross/dot of unit complex numbers
        let cross = a.re * b.im - a.im * b.re;
        let dot = a.re * b.re + a.im * b.im;
        let inc = libm::atan2(cross, dot);
        if libm::fabs(inc) > MAX_DET_STEP {
            return Err(GeomError::PathStepTooLarge {
                at: k,
                jump: libm::fabs(inc),
            });
        }
        total += inc;
    }
    Ok(2 * libm::round(total / TAU) as i64)
}
