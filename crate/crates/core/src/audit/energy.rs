//! Closed-form energy budget for neck-stretched curves: the symplectic area
//! of the pre-limit curve controls both compactness energies.

use core::f64::consts::E;

use super::AuditError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyBudget {
    /// Bound on the contact-form energy: (1+e)/(e-1) · ω.
    pub alpha_max: f64,
    /// Bound on the two-form energy: (1 + (1+e)/(e-1)) · ω.
    pub omega_max: f64,
    /// Combined bound: (1 + 2(1+e)/(e-1)) · ω.
    pub total_max: f64,
    /// The slice constant (1+e)/(e-1) itself.
    pub coefficient: f64,
}

pub fn energy_budget(omega: f64) -> Result<EnergyBudget, AuditError> {
    if !(omega > 0.0) {
        return Err(AuditError::NonPositiveArea);
    }
    let coefficient = (1.0 + E) / (E - 1.0);
    Ok(EnergyBudget {
        alpha_max: coefficient * omega,
        omega_max: (1.0 + coefficient) * omega,
        total_max: (1.0 + 2.0 * coefficient) * omega,
        coefficient,
    })
}
