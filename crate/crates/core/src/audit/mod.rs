//! Combinatorial audit of holomorphic-building index bookkeeping.
//!
//! A building is a purely combinatorial record: genus-zero components with
//! punctures tagged by orbit and polarity, relative Chern numbers, optional
//! multiple-cover data, and an implicit orbit matching (each orbit is the
//! negative puncture of one component and the positive puncture of one
//! other, with a single unmatched orbit). The auditor recomputes every
//! Fredholm index from the puncture counts, checks the building-level index
//! identities by double entry, enforces the top-level index budget of the
//! selected profile, and validates multiple covers.

mod building;
mod energy;
mod report;

pub use building::{
    puncture, AuditProfile, BuildingSpec, ComponentSpec, CoverData, DomainTag, Matching, Polarity,
    Puncture,
};
pub use energy::{energy_budget, EnergyBudget};
pub use report::{audit_building, AuditReport, ComponentIndex, Violation};

use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AuditError {
    #[error("building structure invalid [{rule}]: {detail}")]
    MatchingInvalid { rule: String, detail: String },
    #[error("component {id} has no punctures")]
    NoPunctures { id: String },
    #[error("component {id} is not a plane")]
    NotAPlane { id: String },
    #[error("cover data inconsistent for component {id}: {detail}")]
    CoverInconsistent { id: String, detail: String },
    #[error("energy budget needs a positive symplectic area")]
    NonPositiveArea,
}

/// Direction of the spectral-flow perturbation of a degenerate orbit family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitPerturbation {
    MinusDelta,
    PlusDelta,
}

/// Conley–Zehnder index of a flat-torus geodesic orbit under the standard
/// trivialization: 1 for the -δ perturbation, 0 for +δ.
pub fn cz_index(perturbation: OrbitPerturbation) -> i64 {
    match perturbation {
        OrbitPerturbation::MinusDelta => 1,
        OrbitPerturbation::PlusDelta => 0,
    }
}

/// Total Conley–Zehnder contribution of a component: positive punctures
/// count the -δ value (1), negative punctures the +δ value (0).
pub fn cz_contribution(c: &ComponentSpec) -> i64 {
    c.positive_punctures() as i64 * cz_index(OrbitPerturbation::MinusDelta)
        - c.negative_punctures() as i64 * cz_index(OrbitPerturbation::PlusDelta)
}

/// Fredholm index of a genus-zero punctured component:
/// -2 + #punctures + #positive punctures + 2·c1.
pub fn fredholm_index(c: &ComponentSpec) -> Result<i64, AuditError> {
    if c.punctures.is_empty() {
        return Err(AuditError::NoPunctures { id: c.id.clone() });
    }
    Ok(-2 + c.punctures.len() as i64 + c.positive_punctures() as i64 + 2 * c.c1)
}

/// Maslov index of a plane's compactification: twice the relative Chern
/// number.
pub fn maslov_from_chern(c: &ComponentSpec) -> Result<i64, AuditError> {
    if !c.is_plane {
        return Err(AuditError::NotAPlane { id: c.id.clone() });
    }
    Ok(2 * c.c1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverReport {
    /// 2 = 2d - b (genus-zero Riemann–Hurwitz).
    pub riemann_hurwitz_ok: bool,
    /// d·k_v <= k_u + b.
    pub puncture_bound_ok: bool,
    /// c1 = d·c1_v.
    pub chern_ok: bool,
    /// Index of the underlying curve, from its puncture count and Chern
    /// number (underlying positive punctures are not modeled).
    pub underlying_index: i64,
    /// ind(u) >= d·ind(v), implied by the three checks above.
    pub domination_ok: bool,
}

/// Validate multiple-cover data against the covered component.
pub fn cover_check(c: &ComponentSpec) -> Result<CoverReport, AuditError> {
    let cover = c.cover.as_ref().ok_or_else(|| AuditError::CoverInconsistent {
        id: c.id.clone(),
        detail: String::from("no cover data present"),
    })?;
    let idx = fredholm_index(c)?;
    let rh = 2 == 2 * cover.degree - cover.branch_total;
    let pb = cover.degree * cover.underlying_punctures
        <= c.punctures.len() as i64 + cover.branch_total;
    let ch = c.c1 == cover.degree * cover.underlying_c1;
    let underlying_index = -2 + cover.underlying_punctures + 2 * cover.underlying_c1;
    let dom = idx >= cover.degree * underlying_index;
    let rep = CoverReport {
        riemann_hurwitz_ok: rh,
        puncture_bound_ok: pb,
        chern_ok: ch,
        underlying_index,
        domination_ok: dom,
    };
    if rh && pb && ch && dom {
        Ok(rep)
    } else {
        let mut detail = String::new();
        if !rh {
            detail.push_str("branch count breaks 2 = 2d - b; ");
        }
        if !pb {
            detail.push_str("puncture count breaks d k_v <= k_u + b; ");
        }
        if !ch {
            detail.push_str("Chern number is not d times the underlying one; ");
        }
        if !dom {
            detail.push_str("index fails to dominate d times the underlying index; ");
        }
        Err(AuditError::CoverInconsistent {
            id: c.id.clone(),
            detail,
        })
    }
}

#[cfg(test)]
mod tests;
