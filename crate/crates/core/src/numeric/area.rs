//! Symplectic areas, kept exact when they are rational multiples of π.
//!
//! Mixing an exact and a floating value demotes the result to floating; the
//! comparison then uses a 1e-12 relative tolerance so that level partitioning
//! never splits ties caused by rounding.

use core::cmp::Ordering;
use core::f64::consts::PI;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use super::rational::Rational;
use super::REL_TOL;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Area {
    /// Exactly `q · π`.
    Pi(Rational),
    Real(f64),
}

impl Area {
    pub const ZERO: Area = Area::Pi(Rational::ZERO);

    pub fn pi(num: i128, den: i128) -> Area {
        Area::Pi(Rational::new(num, den))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Area::Pi(q) => q.to_f64() * PI,
            Area::Real(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Area::Pi(_))
    }

    pub fn mul_int(&self, k: i128) -> Area {
        match self {
            Area::Pi(q) => Area::Pi(q.mul_int(k)),
            Area::Real(x) => Area::Real(x * k as f64),
        }
    }

    pub fn mul_rational(&self, k: Rational) -> Area {
        match self {
            Area::Pi(q) => Area::Pi(*q * k),
            Area::Real(x) => Area::Real(x * k.to_f64()),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Area::Pi(q) => q.is_positive(),
            Area::Real(x) => *x > 0.0,
        }
    }

    pub fn is_zero_eps(&self) -> bool {
        match self {
            Area::Pi(q) => q.is_zero(),
            Area::Real(x) => libm::fabs(*x) <= REL_TOL,
        }
    }

    /// Exact comparison on two π-rationals, 1e-12 relative tolerance otherwise.
    pub fn cmp_eps(&self, other: &Area) -> Ordering {
        match (self, other) {
            (Area::Pi(a), Area::Pi(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                let scale = libm::fabs(a).max(libm::fabs(b)).max(1.0);
                if libm::fabs(a - b) <= REL_TOL * scale {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn approx_eq(&self, other: &Area) -> bool {
        self.cmp_eps(other) == Ordering::Equal
    }
}

impl Add for Area {
    type Output = Area;
    fn add(self, rhs: Area) -> Area {
        match (self, rhs) {
            (Area::Pi(a), Area::Pi(b)) => Area::Pi(a + b),
            _ => Area::Real(self.to_f64() + rhs.to_f64()),
        }
    }
}

impl Sub for Area {
    type Output = Area;
    fn sub(self, rhs: Area) -> Area {
        self + (-rhs)
    }
}

impl Neg for Area {
    type Output = Area;
    fn neg(self) -> Area {
        match self {
            Area::Pi(q) => Area::Pi(-q),
            Area::Real(x) => Area::Real(-x),
        }
    }
}

impl fmt::Display for Area {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Area::Pi(q) => {
                if q.is_zero() {
                    write!(f, "0")
                } else if *q == Rational::ONE {
                    write!(f, "pi")
                } else if q.denominator() == 1 {
                    write!(f, "{} pi", q.numerator())
                } else {
                    write!(f, "({}) pi", q)
                }
            }
            Area::Real(x) => write!(f, "{x}"),
        }
    }
}
