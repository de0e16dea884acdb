//! The torus capacity of polydisks and the resulting embedding obstruction.
//!
//! The capacity of the polydisk P(a,b) with a ≤ b is π·a² (the supremum of
//! A₂ over embedded Lagrangian tori), so a product torus with A₂ = π·r² and
//! r > a cannot be carried into P(a,b) by a Hamiltonian isotopy.

use alloc::string::String;
use core::f64::consts::{PI, SQRT_2};

use super::LatticeError;

/// c(P(a,b)) = π·min(a,b)². Accepts infinite b for the symplectic cylinder.
pub fn capacity_polydisk(a: f64, b: f64) -> Result<f64, LatticeError> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(LatticeError::NonPositive);
    }
    let m = a.min(b);
    Ok(PI * m * m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingObstruction {
    pub obstructed: bool,
    /// s ≥ √2·r, the threshold above which A₂(L(r,s)) = π·r².
    pub above_ratio_threshold: bool,
    /// r > a, the capacity comparison.
    pub radius_exceeds_capacity: bool,
    /// A₂ of the torus when the threshold holds.
    pub torus_a2: Option<f64>,
    pub capacity: f64,
    pub reason: String,
}

/// Can L(r,s) (0 < r ≤ s) be ruled out of P(a,b) (0 < a ≤ b)?
pub fn embedding_obstruction(
    r: f64,
    s: f64,
    a: f64,
    b: f64,
) -> Result<EmbeddingObstruction, LatticeError> {
    if !(r > 0.0 && s >= r) || !(a > 0.0 && b >= a) {
        return Err(LatticeError::OrderViolation);
    }
    let above = s >= SQRT_2 * r;
    let exceeds = r > a;
    let capacity = PI * a * a;
    let torus_a2 = if above { Some(PI * r * r) } else { None };
    let obstructed = above && exceeds;
    let reason = if obstructed {
        String::from("A2 of the torus equals pi r^2 and exceeds the capacity pi a^2")
    } else if !above {
        String::from("ratio below sqrt(2): the minimal-area formula does not apply")
    } else {
        String::from("r <= a: the capacity does not obstruct the embedding")
    };
    Ok(EmbeddingObstruction {
        obstructed,
        above_ratio_threshold: above,
        radius_exceeds_capacity: exceeds,
        torus_a2,
        capacity,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polydisk_values() {
        assert!((capacity_polydisk(1.0, 2.0).unwrap() - PI).abs() < 1e-15);
        assert!((capacity_polydisk(1.0, 1.0).unwrap() - PI).abs() < 1e-15);
        // the symplectic cylinder as the b -> infinity polydisk
        assert!((capacity_polydisk(1.0, f64::INFINITY).unwrap() - PI).abs() < 1e-15);
        assert_eq!(
            capacity_polydisk(0.0, 1.0).unwrap_err(),
            LatticeError::NonPositive
        );
    }

    #[test]
    fn obstruction_cases() {
        let o = embedding_obstruction(1.0, 1.5, 0.9, 10.0).unwrap();
        assert!(o.obstructed);
        let o = embedding_obstruction(1.0, 1.5, 1.1, 10.0).unwrap();
        assert!(!o.obstructed);
        // below the ratio threshold nothing is claimed
        let o = embedding_obstruction(1.0, 1.2, 0.9, 10.0).unwrap();
        assert!(!o.obstructed && !o.above_ratio_threshold);
        // threshold boundaries: s = sqrt(2) r counts, r = a does not
        let o = embedding_obstruction(1.0, SQRT_2, 0.9, 1.0).unwrap();
        assert!(o.above_ratio_threshold && o.obstructed);
        let o = embedding_obstruction(1.0, 2.0, 1.0, 1.0).unwrap();
        assert!(!o.obstructed && !o.radius_exceeds_capacity);
        assert_eq!(
            embedding_obstruction(1.5, 1.0, 1.0, 2.0).unwrap_err(),
            LatticeError::OrderViolation
        );
    }
}
