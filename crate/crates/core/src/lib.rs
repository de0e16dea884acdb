//! Computational toolkit for Lagrangian tori in the standard symplectic R⁴.
//!
//! The crate builds sampled Lagrangian cylinders and tori from movies of
//! plane curves, evaluates Liouville/symplectic areas by periodic quadrature,
//! computes winding, rotation and Maslov indices, runs exact arithmetic on the
//! H₁ ≅ Z² invariant lattice of a torus (minimal Maslov-2 area, monotonicity,
//! admissibility bookkeeping, unlinking verdicts, capacity formulas), counts
//! signed intersections of loops with spanning solid tori, and audits the
//! combinatorial index bookkeeping of holomorphic buildings.
//!
//! Everything here is pure and deterministic: values are immutable after
//! construction and safe to share across threads. IO, file formats and the
//! command-line front end live in the companion `torlink` crate.

#![no_std]
// `!(x > 0.0)` guards are deliberate: they reject NaN along with
// non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod audit;
pub mod geom;
pub mod lattice;
pub mod linking;
pub mod movie;
pub mod numeric;

pub use geom::{
    liouville_integral, maslov_index, plane_liouville_area, rotation_number, sample_chekanov,
    sample_clifford, winding_number, LagrangianSurface, Point4, SampledCurve2, SampledLoop4,
    SolidTorusModel, SurfaceKind,
};
pub use lattice::{ClassZ2, H1LatticeData, TorusDescriptor, TorusKind};
pub use linking::{
    homological_linking_certificate, intersection_number, pi1_class, CrossingRecord,
    LinkingCertificate, SpanningModel,
};
pub use movie::{
    adjust_loop_area, close_up, close_up_standard_cylinder, flat_disk_family, lift,
    linked_cylinder_movie, validate_movie, CloseUpParams, ClosedUpTorus, LinkedCylinderParams,
    Movie,
};
pub use numeric::{Area, Rational};
