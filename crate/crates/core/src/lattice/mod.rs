//! Exact computations on the H₁ ≅ Z² lattice of a torus: the minimal
//! positive Maslov-2 area A₂, monotonicity, the μ-infimal class and its basis
//! companion, Maslov-zero area bounds, torus descriptors, the unlinking
//! verdict engine, and the capacity / embedding-obstruction formulas.

mod capacity;
mod descriptor;
mod verdict;

pub use capacity::{capacity_polydisk, embedding_obstruction, EmbeddingObstruction};
pub use descriptor::{
    chekanov_descriptor, chekanov_descriptor_exact, clifford_descriptor, clifford_descriptor_exact,
    closeup_descriptor, product_torus_exact, product_torus_lattice, Admissibility, TorusDescriptor,
    TorusKind,
};
pub use verdict::{
    level_partition, unlinking_verdict, Verdict, VerdictKind, RULE_ADMISSIBLE_HOMOLOGICAL,
    RULE_AREA_GAP, RULE_CLIFFORD_PAIR, RULE_ENUMERATIVE_BASIS, RULE_EQUAL_MONOTONE, RULE_PI1,
    RULE_SOLID_TORUS,
};

use alloc::string::String;
use core::cmp::Ordering;

use crate::numeric::{Area, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("Maslov values on an orientable torus must be even")]
    OddMaslovComponent,
    #[error("no Maslov-2 class: gcd of the Maslov values does not divide 2")]
    NoMaslovTwoClass,
    #[error("no Maslov-2 class of positive area")]
    NoPositiveArea,
    #[error("lattice is monotone: the minimizing class is not unique")]
    Monotone,
    #[error("operation requires monotone input")]
    NonMonotoneInput,
    #[error("argument must be positive")]
    NonPositive,
    #[error("arguments violate the required ordering")]
    OrderViolation,
}

/// A class in H₁(L;Z) ≅ Z² in the fixed basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassZ2(pub i64, pub i64);

impl ClassZ2 {
    pub fn scale(self, k: i64) -> ClassZ2 {
        ClassZ2(self.0 * k, self.1 * k)
    }
}

impl core::ops::Add for ClassZ2 {
    type Output = ClassZ2;
    fn add(self, o: ClassZ2) -> ClassZ2 {
        ClassZ2(self.0 + o.0, self.1 + o.1)
    }
}

impl core::ops::Neg for ClassZ2 {
    type Output = ClassZ2;
    fn neg(self) -> ClassZ2 {
        ClassZ2(-self.0, -self.1)
    }
}

/// μ and ω as homomorphisms on Z², given by their values on a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct H1LatticeData {
    mu: [i64; 2],
    omega: [Area; 2],
    pub provenance: String,
}

impl H1LatticeData {
    pub fn new(mu: [i64; 2], omega: [Area; 2], provenance: &str) -> Result<H1LatticeData, LatticeError> {
        if mu[0] % 2 != 0 || mu[1] % 2 != 0 {
            return Err(LatticeError::OddMaslovComponent);
        }
        Ok(H1LatticeData {
            mu,
            omega,
            provenance: String::from(provenance),
        })
    }

    pub fn mu(&self) -> [i64; 2] {
        self.mu
    }

    pub fn omega(&self) -> [Area; 2] {
        self.omega
    }

    pub fn mu_of(&self, c: ClassZ2) -> i64 {
        self.mu[0] * c.0 + self.mu[1] * c.1
    }

    pub fn omega_of(&self, c: ClassZ2) -> Area {
        self.omega[0].mul_int(c.0 as i128) + self.omega[1].mul_int(c.1 as i128)
    }

    /// The same homomorphisms expressed in the basis whose vectors are the
    /// columns of `m` (m must be unimodular for this to be a basis change).
    pub fn transformed(&self, m: &[[i64; 2]; 2]) -> Result<H1LatticeData, LatticeError> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        assert!(det == 1 || det == -1, "basis change must be unimodular");
        let col = |k: usize| ClassZ2(m[0][k], m[1][k]);
        H1LatticeData::new(
            [self.mu_of(col(0)), self.mu_of(col(1))],
            [self.omega_of(col(0)), self.omega_of(col(1))],
            &self.provenance,
        )
    }

    /// All areas scaled by a positive rational (test helper for covariance).
    pub fn scaled(&self, k: Rational) -> H1LatticeData {
        H1LatticeData {
            mu: self.mu,
            omega: [self.omega[0].mul_rational(k), self.omega[1].mul_rational(k)],
            provenance: self.provenance.clone(),
        }
    }
}

/// The affine line of Maslov-2 classes: every solution of μ = 2 is
/// `base + n·generator` with `generator` primitive spanning ker μ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaslovTwoCoset {
    pub base: ClassZ2,
    pub generator: ClassZ2,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), if a >= 0 { 1 } else { -1 }, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Solve μ(base) = 2 and span ker μ.
pub fn maslov_two_coset(l: &H1LatticeData) -> Result<MaslovTwoCoset, LatticeError> {
    let [m1, m2] = l.mu();
    if m1 == 0 && m2 == 0 {
        return Err(LatticeError::NoMaslovTwoClass);
    }
    let (g, x, y) = ext_gcd(m1, m2);
    if 2 % g != 0 {
        return Err(LatticeError::NoMaslovTwoClass);
    }
    let k = 2 / g;
    let base = ClassZ2(x * k, y * k);
    let generator = ClassZ2(-m2 / g, m1 / g);
    debug_assert_eq!(l.mu_of(base), 2);
    debug_assert_eq!(l.mu_of(generator), 0);
    Ok(MaslovTwoCoset { base, generator })
}

/// Minimum positive area over the Maslov-2 coset plus the attaining class.
fn a2_with_argmin(l: &H1LatticeData) -> Result<(Area, ClassZ2, MaslovTwoCoset), LatticeError> {
    let coset = maslov_two_coset(l)?;
    let wb = l.omega_of(coset.base);
    let wg = l.omega_of(coset.generator);
    if wg.is_zero_eps() {
        return if wb.is_positive() {
            Ok((wb, coset.base, coset))
        } else {
            Err(LatticeError::NoPositiveArea)
        };
    }
    // affine in n: the minimum positive value sits next to the root of
    // wb + n·wg = 0; scan the four candidates around it
    let n0 = match (&wb, &wg) {
        (Area::Pi(b), Area::Pi(g)) => {
            let q = Rational::new(-b.numerator() * g.denominator(), b.denominator() * g.numerator());
            q.floor() as i64
        }
        _ => libm::floor(-wb.to_f64() / wg.to_f64()) as i64,
    };
    let mut best: Option<(Area, i64)> = None;
    for n in (n0 - 2)..=(n0 + 2) {
        let v = wb + wg.mul_int(n as i128);
        if !v.is_positive() || v.is_zero_eps() {
            continue;
        }
        match &best {
            Some((bv, _)) if v.cmp_eps(bv) != Ordering::Less => {}
            _ => best = Some((v, n)),
        }
    }
    match best {
        Some((v, n)) => Ok((v, coset.base + coset.generator.scale(n), coset)),
        None => Err(LatticeError::NoPositiveArea),
    }
}

/// A₂: the minimum positive area among Maslov-2 classes, in closed form as
/// an arithmetic-progression minimum.
pub fn a2(l: &H1LatticeData) -> Result<Area, LatticeError> {
    a2_with_argmin(l).map(|(v, _, _)| v)
}

/// The monotonicity factor c when ω = c·μ with c > 0.
pub fn monotonicity(l: &H1LatticeData) -> Option<Area> {
    let [m1, m2] = l.mu();
    let [w1, w2] = l.omega();
    // cross-ratio test ω1·μ2 = ω2·μ1, exact on rationals
    if !w1.mul_int(m2 as i128).approx_eq(&w2.mul_int(m1 as i128)) {
        return None;
    }
    let c = if m1 != 0 {
        if m2 == 0 && !w2.is_zero_eps() {
            return None;
        }
        w1.mul_rational(Rational::new(1, m1 as i128))
    } else if m2 != 0 {
        if !w1.is_zero_eps() {
            return None;
        }
        w2.mul_rational(Rational::new(1, m2 as i128))
    } else {
        return None;
    };
    if c.is_positive() && !c.is_zero_eps() {
        Some(c)
    } else {
        None
    }
}

/// The unique Maslov-2 class of minimal positive area, for non-monotone data.
pub fn mu_infimal(l: &H1LatticeData) -> Result<ClassZ2, LatticeError> {
    if monotonicity(l).is_some() {
        return Err(LatticeError::Monotone);
    }
    a2_with_argmin(l).map(|(_, class, _)| class)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MuTwoBasis {
    pub alpha0: ClassZ2,
    pub alpha1: ClassZ2,
    /// ω(α₁) ≥ 2·ω(α₀): holds for lattices of actual Lagrangian tori, not
    /// forced for arbitrary data.
    pub doubling_ok: bool,
}

/// α₀ plus its coset neighbor α₁ with ω(α₁) > ω(α₀); the pair generates.
pub fn mu_two_basis(l: &H1LatticeData) -> Result<MuTwoBasis, LatticeError> {
    if monotonicity(l).is_some() {
        return Err(LatticeError::Monotone);
    }
    let (a2_val, alpha0, coset) = a2_with_argmin(l)?;
    let wg = l.omega_of(coset.generator);
    // non-monotone with a2 defined means ω(generator) != 0
    let step = if wg.is_positive() {
        coset.generator
    } else {
        -coset.generator
    };
    let alpha1 = alpha0 + step;
    let w1 = l.omega_of(alpha1);
    let doubling_ok = w1.cmp_eps(&a2_val.mul_int(2)) != Ordering::Less;
    debug_assert_eq!(l.mu_of(alpha1), 2);
    debug_assert_eq!(
        (alpha0.0 * alpha1.1 - alpha0.1 * alpha1.0).abs(),
        1,
        "coset neighbors generate the lattice"
    );
    Ok(MuTwoBasis {
        alpha0,
        alpha1,
        doubling_ok,
    })
}

/// Minimum area over the positive-area Maslov-zero classes n(α₁-α₀), n ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MinPositiveArea {
    Finite(Area),
    /// No Maslov-zero class has positive area.
    Infinite,
}

pub fn maslov_zero_min_positive_area(l: &H1LatticeData) -> Result<MinPositiveArea, LatticeError> {
    let basis = mu_two_basis(l)?;
    Ok(maslov_zero_min_from_basis(
        l.omega_of(basis.alpha0),
        l.omega_of(basis.alpha1),
    ))
}

/// Same computation from the basis areas directly: the minimum over n ≥ 1 of
/// n·(ω(α₁) - ω(α₀)), or +infinity when the gap is not positive.
pub fn maslov_zero_min_from_basis(omega0: Area, omega1: Area) -> MinPositiveArea {
    let gap = omega1 - omega0;
    if gap.is_positive() && !gap.is_zero_eps() {
        MinPositiveArea::Finite(gap)
    } else {
        MinPositiveArea::Infinite
    }
}

/// Brute-force oracle for A₂: scan n in [-range, range] directly.
/// Kept independent of the closed form; used by tests and the acceptance
/// suite for exact cross-checking.
pub fn a2_brute_force(l: &H1LatticeData, range: i64) -> Result<Area, LatticeError> {
    let coset = maslov_two_coset(l)?;
    let wb = l.omega_of(coset.base);
    let wg = l.omega_of(coset.generator);
    match (&wb, &wg) {
        (Area::Pi(b), Area::Pi(g)) => {
            // single common denominator so the scan is pure integer arithmetic
            let den = b.denominator() * g.denominator();
            let bn = b.numerator() * g.denominator();
            let gn = g.numerator() * b.denominator();
            let mut best: Option<i128> = None;
            for n in -range..=range {
                let v = bn + gn * n as i128;
                if v > 0 && best.is_none_or(|b| v < b) {
                    best = Some(v);
                }
            }
            match best {
                Some(v) => Ok(Area::Pi(Rational::new(v, den))),
                None => Err(LatticeError::NoPositiveArea),
            }
        }
        _ => {
            let (b, g) = (wb.to_f64(), wg.to_f64());
            let mut best = f64::INFINITY;
            for n in -range..=range {
                let v = b + g * n as f64;
                if v > 0.0 && v < best {
                    best = v;
                }
            }
            if best.is_finite() {
                Ok(Area::Real(best))
            } else {
                Err(LatticeError::NoPositiveArea)
            }
        }
    }
}
