//! Building and component records plus the structural matching rules.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::AuditError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainTag {
    /// The exact complement level; components here carry all the Chern data
    /// and may only have negative punctures.
    TopLevel,
    Neck1,
    Neck2,
    CotangentBottom,
}

impl DomainTag {
    pub fn is_top(&self) -> bool {
        matches!(self, DomainTag::TopLevel)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Puncture {
    pub orbit: String,
    pub polarity: Polarity,
}

/// Multiple-cover data: `u = v ∘ φ` with deg φ = d > 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverData {
    pub degree: i64,
    /// Total branching b = Σ (m_p - 1).
    pub branch_total: i64,
    pub underlying_punctures: i64,
    pub underlying_c1: i64,
}

#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub id: String,
    pub domain: DomainTag,
    pub punctures: Vec<Puncture>,
    /// Relative Chern number with respect to the neck trivializations.
    pub c1: i64,
    pub is_plane: bool,
    pub cover: Option<CoverData>,
}

impl ComponentSpec {
    pub fn new(id: &str, domain: DomainTag, punctures: Vec<Puncture>, c1: i64) -> ComponentSpec {
        let is_plane = punctures.len() == 1;
        ComponentSpec {
            id: String::from(id),
            domain,
            punctures,
            c1,
            is_plane,
            cover: None,
        }
    }

    pub fn positive_punctures(&self) -> usize {
        self.punctures
            .iter()
            .filter(|p| p.polarity == Polarity::Positive)
            .count()
    }

    pub fn negative_punctures(&self) -> usize {
        self.punctures.len() - self.positive_punctures()
    }

    /// Euler characteristic of the punctured genus-zero domain.
    pub fn euler(&self) -> i64 {
        2 - self.punctures.len() as i64
    }
}

pub fn puncture(orbit: &str, polarity: Polarity) -> Puncture {
    Puncture {
        orbit: String::from(orbit),
        polarity,
    }
}

/// Which top-level index budget the audit enforces: 1 for buildings arising
/// as limits of planes between two Lagrangians, 2 for limits of the sphere
/// foliation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AuditProfile {
    #[default]
    PlaneLimit,
    SphereLimit,
}

impl AuditProfile {
    pub fn top_level_budget(&self) -> i64 {
        match self {
            AuditProfile::PlaneLimit => 1,
            AuditProfile::SphereLimit => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AuditProfile::PlaneLimit => "plane-limit",
            AuditProfile::SphereLimit => "sphere-limit",
        }
    }

    pub fn parse(s: &str) -> Option<AuditProfile> {
        match s {
            "plane-limit" => Some(AuditProfile::PlaneLimit),
            "sphere-limit" => Some(AuditProfile::SphereLimit),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BuildingSpec {
    pub components: Vec<ComponentSpec>,
    /// The pre-limit curves were planes; forces K = N.
    pub limit_of_planes: bool,
    pub profile: AuditProfile,
    /// Symplectic area of the pre-limit curves, for the energy budget.
    pub omega: Option<f64>,
    /// Reject plane components asymptotic into neck levels (the flat metric
    /// carries no contractible geodesics); off by default, the caller models
    /// orbit classes.
    pub forbid_neck_planes: bool,
}

/// Derived orbit matching: for each orbit, which component carries it as a
/// negative respectively positive puncture.
#[derive(Clone, Debug, Default)]
pub struct Matching {
    /// orbit -> (negative end component, positive end component if matched)
    pub ends: BTreeMap<String, (String, Option<String>)>,
    /// The unique orbit not paired with a positive puncture.
    pub unmatched: String,
}

impl Matching {
    pub fn orbit_count(&self) -> usize {
        self.ends.len()
    }
}

impl BuildingSpec {
    pub fn new(components: Vec<ComponentSpec>) -> BuildingSpec {
        BuildingSpec {
            components,
            limit_of_planes: false,
            profile: AuditProfile::PlaneLimit,
            omega: None,
            forbid_neck_planes: false,
        }
    }

    /// Structural validation: unique ids, punctured components, plane and
    /// top-level polarity constraints, and the matching rule (every orbit is
    /// the negative puncture of exactly one component and the positive
    /// puncture of exactly one, with a single unmatched orbit).
    pub fn derive_matching(&self) -> Result<Matching, AuditError> {
        let invalid = |rule: &str, detail: String| AuditError::MatchingInvalid {
            rule: String::from(rule),
            detail,
        };
        if self.components.is_empty() {
            return Err(invalid("orbit-matching", String::from("no components")));
        }
        let mut seen = BTreeMap::new();
        for c in &self.components {
            if seen.insert(c.id.clone(), ()).is_some() {
                return Err(invalid(
                    "duplicate-id",
                    alloc::format!("component id {} repeats", c.id),
                ));
            }
            if c.punctures.is_empty() {
                return Err(AuditError::NoPunctures { id: c.id.clone() });
            }
            if c.is_plane && c.punctures.len() != 1 {
                return Err(invalid(
                    "plane-single-puncture",
                    alloc::format!("component {} marked as a plane with {} punctures", c.id, c.punctures.len()),
                ));
            }
            if c.domain.is_top() && c.positive_punctures() > 0 {
                return Err(invalid(
                    "top-level-negative-punctures",
                    alloc::format!("top-level component {} has a positive puncture", c.id),
                ));
            }
            if self.forbid_neck_planes
                && c.is_plane
                && matches!(c.domain, DomainTag::Neck1 | DomainTag::Neck2)
            {
                return Err(invalid(
                    "no-neck-planes",
                    alloc::format!("plane {} asymptotic into a neck level", c.id),
                ));
            }
        }
        let mut neg: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut pos: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for c in &self.components {
            for p in &c.punctures {
                let slot = match p.polarity {
                    Polarity::Negative => neg.entry(p.orbit.clone()).or_default(),
                    Polarity::Positive => pos.entry(p.orbit.clone()).or_default(),
                };
                slot.push(c.id.clone());
            }
        }
        let mut ends = BTreeMap::new();
        let mut unmatched: Vec<String> = Vec::new();
        for (orbit, negs) in &neg {
            if negs.len() != 1 {
                return Err(invalid(
                    "orbit-matching",
                    alloc::format!("orbit {orbit} is a negative puncture of {} components", negs.len()),
                ));
            }
            match pos.get(orbit) {
                Some(ps) if ps.len() == 1 => {
                    ends.insert(orbit.clone(), (negs[0].clone(), Some(ps[0].clone())));
                }
                Some(ps) => {
                    return Err(invalid(
                        "orbit-matching",
                        alloc::format!("orbit {orbit} is a positive puncture of {} components", ps.len()),
                    ));
                }
                None => {
                    unmatched.push(orbit.clone());
                    ends.insert(orbit.clone(), (negs[0].clone(), None));
                }
            }
        }
        for orbit in pos.keys() {
            if !neg.contains_key(orbit) {
                return Err(invalid(
                    "orbit-matching",
                    alloc::format!("orbit {orbit} has a positive end but no negative end"),
                ));
            }
        }
        if unmatched.len() != 1 {
            return Err(invalid(
                "unmatched-orbit-count",
                alloc::format!("expected exactly one unmatched orbit, found {}", unmatched.len()),
            ));
        }
        Ok(Matching {
            ends,
            unmatched: unmatched.remove(0),
        })
    }
}
