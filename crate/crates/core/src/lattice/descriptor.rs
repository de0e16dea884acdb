//! Torus descriptors: lattice data plus the reference enumerative counts and
//! admissibility tags consumed by the verdict engine.
//!
//! Enumerative disk counts are stored reference data (the standard product
//! torus values), never computed from holomorphic curves.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ClassZ2, H1LatticeData, LatticeError};
use crate::movie::ClosedUpTorus;
use crate::numeric::{Area, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusKind {
    Clifford,
    Chekanov,
    Product,
    CloseUp,
    Custom,
}

/// Admissibility is carried as data with its justification; it is never
/// inferred beyond the product-torus ratio threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: String,
}

impl Admissibility {
    fn yes(reason: &str) -> Admissibility {
        Admissibility {
            admissible: true,
            reason: String::from(reason),
        }
    }
    fn no(reason: &str) -> Admissibility {
        Admissibility {
            admissible: false,
            reason: String::from(reason),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TorusDescriptor {
    pub lattice: H1LatticeData,
    pub kind: TorusKind,
    /// Known mod-2 counts of Maslov-2 disks through a generic point, by class.
    pub enumerative: BTreeMap<(i64, i64), u8>,
    /// Image generator in π₁(complement) ≅ Z when known; 0 means trivial.
    pub pi1_image_generator: Option<i64>,
    pub admissible: Admissibility,
}

impl TorusDescriptor {
    pub fn custom(lattice: H1LatticeData) -> TorusDescriptor {
        TorusDescriptor {
            lattice,
            kind: TorusKind::Custom,
            enumerative: BTreeMap::new(),
            pi1_image_generator: None,
            admissible: Admissibility::no("no admissibility data"),
        }
    }

    /// Two recorded unit counts on classes spanning a unimodular basis; the
    /// hypothesis of the enumerative smooth-unlinking rule.
    pub fn has_enumerative_basis(&self) -> bool {
        let ones: Vec<ClassZ2> = self
            .enumerative
            .iter()
            .filter(|&(_, &v)| v % 2 == 1)
            .map(|(&(a, b), _)| ClassZ2(a, b))
            .collect();
        for i in 0..ones.len() {
            for j in (i + 1)..ones.len() {
                let det = ones[i].0 * ones[j].1 - ones[i].1 * ones[j].0;
                if det.abs() == 1 {
                    return true;
                }
            }
        }
        false
    }
}

/// Product torus L(r,s) with exact areas π·r2 and π·s2 given the squared
/// radii as rationals. Admissible when s²/r² ≥ 2 (both orderings accepted).
pub fn product_torus_exact(r2: Rational, s2: Rational) -> Result<TorusDescriptor, LatticeError> {
    if !r2.is_positive() || !s2.is_positive() {
        return Err(LatticeError::NonPositive);
    }
    let lattice = H1LatticeData::new([2, 2], [Area::Pi(r2), Area::Pi(s2)], "product")?;
    let clifford = r2 == s2;
    let (lo, hi) = if r2 <= s2 { (r2, s2) } else { (s2, r2) };
    let admissible = if clifford {
        Admissibility::no("monotone: admissibility is a non-monotone notion")
    } else if hi >= lo.mul_int(2) {
        Admissibility::yes("product torus with ratio of radii at least sqrt(2)")
    } else {
        Admissibility::no("product torus below the sqrt(2) ratio threshold: unknown")
    };
    let mut enumerative = BTreeMap::new();
    if clifford {
        // unit disk counts on both factor classes
        enumerative.insert((1, 0), 1u8);
        enumerative.insert((0, 1), 1u8);
    }
    Ok(TorusDescriptor {
        lattice,
        kind: if clifford {
            TorusKind::Clifford
        } else {
            TorusKind::Product
        },
        enumerative,
        pi1_image_generator: None,
        admissible,
    })
}

/// Product torus from floating radii.
pub fn product_torus_lattice(r: f64, s: f64) -> Result<TorusDescriptor, LatticeError> {
    if !(r > 0.0) || !(s > 0.0) {
        return Err(LatticeError::NonPositive);
    }
    let pi = core::f64::consts::PI;
    let lattice = H1LatticeData::new(
        [2, 2],
        [Area::Real(pi * r * r), Area::Real(pi * s * s)],
        "product",
    )?;
    let clifford = crate::numeric::approx_eq_rel(r, s, 1e-12);
    let (lo, hi) = if r <= s { (r, s) } else { (s, r) };
    let admissible = if clifford {
        Admissibility::no("monotone: admissibility is a non-monotone notion")
    } else if hi * hi >= 2.0 * lo * lo * (1.0 - 1e-12) {
        Admissibility::yes("product torus with ratio of radii at least sqrt(2)")
    } else {
        Admissibility::no("product torus below the sqrt(2) ratio threshold: unknown")
    };
    let mut enumerative = BTreeMap::new();
    if clifford {
        enumerative.insert((1, 0), 1u8);
        enumerative.insert((0, 1), 1u8);
    }
    Ok(TorusDescriptor {
        lattice,
        kind: if clifford {
            TorusKind::Clifford
        } else {
            TorusKind::Product
        },
        enumerative,
        pi1_image_generator: None,
        admissible,
    })
}

/// The standard torus |z1| = |z2| = r with monotonicity factor π·r²/2.
pub fn clifford_descriptor(r: f64) -> Result<TorusDescriptor, LatticeError> {
    product_torus_lattice(r, r)
}

/// Exact-radius variant: squared radius as a rational.
pub fn clifford_descriptor_exact(r2: Rational) -> Result<TorusDescriptor, LatticeError> {
    product_torus_exact(r2, r2)
}

/// The standard exotic monotone torus of the same factor π·r²/2. Its basis
/// carries Maslov values (2, 0); no enumerative reference data is attached.
pub fn chekanov_descriptor(r: f64) -> Result<TorusDescriptor, LatticeError> {
    if !(r > 0.0) {
        return Err(LatticeError::NonPositive);
    }
    let pi = core::f64::consts::PI;
    let lattice = H1LatticeData::new(
        [2, 0],
        [Area::Real(pi * r * r), Area::Real(0.0)],
        "chekanov",
    )?;
    Ok(TorusDescriptor {
        lattice,
        kind: TorusKind::Chekanov,
        enumerative: BTreeMap::new(),
        pi1_image_generator: None,
        admissible: Admissibility::no("monotone: admissibility is a non-monotone notion"),
    })
}

pub fn chekanov_descriptor_exact(r2: Rational) -> Result<TorusDescriptor, LatticeError> {
    if !r2.is_positive() {
        return Err(LatticeError::NonPositive);
    }
    let lattice = H1LatticeData::new(
        [2, 0],
        [Area::Pi(r2), Area::Pi(Rational::ZERO)],
        "chekanov",
    )?;
    Ok(TorusDescriptor {
        lattice,
        kind: TorusKind::Chekanov,
        enumerative: BTreeMap::new(),
        pi1_image_generator: None,
        admissible: Admissibility::no("monotone: admissibility is a non-monotone notion"),
    })
}

/// Descriptor of a closed-up torus from its measured invariants. The two
/// flat-disk families make it admissible; that conclusion is stored as data.
pub fn closeup_descriptor(torus: &ClosedUpTorus) -> Result<TorusDescriptor, LatticeError> {
    let lattice = H1LatticeData::new(
        [torus.maslov_sigma, torus.maslov_tau],
        [Area::Real(torus.area_sigma), Area::Real(torus.area_tau)],
        "close_up",
    )?;
    Ok(TorusDescriptor {
        lattice,
        kind: TorusKind::CloseUp,
        enumerative: BTreeMap::new(),
        pi1_image_generator: None,
        admissible: Admissibility::yes(
            "closed-up torus: the flat-disk family realizes a unit minimal-disk count",
        ),
    })
}
