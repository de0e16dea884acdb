//! The building audit: per-component indices, double-entry identities, the
//! top-level budget, and cover validation, with rule-tagged violations.

use alloc::string::String;
use alloc::vec::Vec;

use super::building::{BuildingSpec, Matching};
use super::energy::{energy_budget, EnergyBudget};
use super::{cover_check, fredholm_index, AuditError};

pub const RULE_INDEX_SUM: &str = "index-sum-closed-form";
pub const RULE_PLANE_LIMIT_COUNT: &str = "plane-limit-count";
pub const RULE_PLANE_LIMIT_TOTAL: &str = "plane-limit-total";
pub const RULE_LOWER_LEVEL_SUM: &str = "lower-level-index-sum";
pub const RULE_TOP_BUDGET: &str = "top-level-index-budget";
pub const RULE_NONNEGATIVE: &str = "component-index-nonnegative";
pub const RULE_PLANE_AT_LEAST_ONE: &str = "plane-index-at-least-one";
pub const RULE_PLANE_EQUALITY: &str = "plane-equality-simple-cover";
pub const RULE_COVER: &str = "cover-consistency";

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// Identifier of the broken rule; doubles as the citation in reports.
    pub rule: String,
    pub detail: String,
    pub component_ids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentIndex {
    pub id: String,
    pub index: i64,
    pub euler: i64,
    pub punctures: usize,
    pub positive_punctures: usize,
    pub top_level: bool,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub components: Vec<ComponentIndex>,
    pub n_components: usize,
    pub n_orbits: usize,
    pub unmatched_orbit: String,
    pub total_index: i64,
    /// -2N + (3K - 2) + 2Σc1, the closed form the total must equal.
    pub closed_form_total: i64,
    pub top_level_sum: i64,
    pub top_level_budget: i64,
    pub lower_level_sum: i64,
    /// -Σ_T χ + (K - 1), the identity target for the lower levels.
    pub lower_level_rhs: i64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub energy: Option<EnergyBudget>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Audit a building: recompute all indices and verify the bookkeeping.
pub fn audit_building(building: &BuildingSpec) -> Result<AuditReport, AuditError> {
    let matching: Matching = building.derive_matching()?;
    let n = building.components.len() as i64;
    let k = matching.orbit_count() as i64;

    let mut components = Vec::with_capacity(building.components.len());
    let mut violations: Vec<Violation> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut total_index = 0i64;
    let mut top_level_sum = 0i64;
    let mut lower_level_sum = 0i64;
    let mut lower_level_euler = 0i64;
    let mut c1_total = 0i64;

    for c in &building.components {
        let index = fredholm_index(c)?;
        total_index += index;
        c1_total += c.c1;
        if c.domain.is_top() {
            top_level_sum += index;
        } else {
            lower_level_sum += index;
            lower_level_euler += c.euler();
            if c.positive_punctures() > 0 && c.c1 != 0 {
                notes.push(alloc::format!(
                    "component {}: nonzero Chern number off the top level",
                    c.id
                ));
            }
        }
        if index < 0 {
            violations.push(Violation {
                rule: String::from(RULE_NONNEGATIVE),
                detail: alloc::format!("index {index}"),
                component_ids: alloc::vec![c.id.clone()],
            });
        }
        if c.is_plane {
            if index < 1 {
                violations.push(Violation {
                    rule: String::from(RULE_PLANE_AT_LEAST_ONE),
                    detail: alloc::format!("plane index {index}"),
                    component_ids: alloc::vec![c.id.clone()],
                });
            }
            // equality case: index 1 forces a simple cover of Maslov 2
            if index == 1 {
                if let Some(cover) = &c.cover {
                    if cover.degree > 1 {
                        violations.push(Violation {
                            rule: String::from(RULE_PLANE_EQUALITY),
                            detail: String::from(
                                "index-one plane marked as a multiple cover",
                            ),
                            component_ids: alloc::vec![c.id.clone()],
                        });
                    }
                }
            }
            // the stricter index (with the positive-puncture term) is used
            // throughout; log when it differs from -χ + 2c1
            if c.positive_punctures() > 0 {
                notes.push(alloc::format!(
                    "component {}: index includes its positive puncture",
                    c.id
                ));
            }
        }
        if let Some(_cover) = &c.cover {
            if let Err(AuditError::CoverInconsistent { id, detail }) = cover_check(c) {
                violations.push(Violation {
                    rule: String::from(RULE_COVER),
                    detail,
                    component_ids: alloc::vec![id],
                });
            }
        }
        components.push(ComponentIndex {
            id: c.id.clone(),
            index,
            euler: c.euler(),
            punctures: c.punctures.len(),
            positive_punctures: c.positive_punctures(),
            top_level: c.domain.is_top(),
        });
    }

    // (i) double-entry: per-component sum against the closed form
    let closed_form_total = -2 * n + (3 * k - 2) + 2 * c1_total;
    if total_index != closed_form_total {
        violations.push(Violation {
            rule: String::from(RULE_INDEX_SUM),
            detail: alloc::format!("Σ ind = {total_index} vs closed form {closed_form_total}"),
            component_ids: Vec::new(),
        });
    }
    // (ii) limits of planes glue to a plane: K = N and the simplified total
    if building.limit_of_planes {
        if k != n {
            violations.push(Violation {
                rule: String::from(RULE_PLANE_LIMIT_COUNT),
                detail: alloc::format!("K = {k} differs from N = {n}"),
                component_ids: Vec::new(),
            });
        }
        let plane_total = n - 2 + 2 * c1_total;
        if total_index != plane_total {
            violations.push(Violation {
                rule: String::from(RULE_PLANE_LIMIT_TOTAL),
                detail: alloc::format!("Σ ind = {total_index} vs N - 2 + 2Σc1 = {plane_total}"),
                component_ids: Vec::new(),
            });
        }
    }
    // (iii) lower-level identity: Σ_T ind = -Σ_T χ + (K - 1)
    let lower_level_rhs = -lower_level_euler + (k - 1);
    if lower_level_sum != lower_level_rhs {
        violations.push(Violation {
            rule: String::from(RULE_LOWER_LEVEL_SUM),
            detail: alloc::format!(
                "lower-level Σ ind = {lower_level_sum} vs -Σχ + (K-1) = {lower_level_rhs}"
            ),
            component_ids: Vec::new(),
        });
    }
    // (iv) top-level budget of the audit profile
    let top_level_budget = building.profile.top_level_budget();
    if top_level_sum > top_level_budget {
        violations.push(Violation {
            rule: String::from(RULE_TOP_BUDGET),
            detail: alloc::format!("top-level Σ ind = {top_level_sum} > {top_level_budget}"),
            component_ids: Vec::new(),
        });
    }

    let energy = match building.omega {
        Some(w) => Some(energy_budget(w)?),
        None => None,
    };

    components.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(AuditReport {
        components,
        n_components: n as usize,
        n_orbits: k as usize,
        unmatched_orbit: matching.unmatched,
        total_index,
        closed_form_total,
        top_level_sum,
        top_level_budget,
        lower_level_sum,
        lower_level_rhs,
        violations,
        notes,
        energy,
    })
}
