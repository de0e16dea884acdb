//! The unlinking verdict engine and the level partition of monotone
//! configurations.
//!
//! The decision table encodes, in order: the Clifford-pair rule, the
//! equal-factor monotone rule, the enumerative-basis rule, the solid-torus
//! bound with its π₁ criterion, and the admissible homological rule. Every
//! verdict carries the identifiers of the rules it used so reports are
//! auditable. Where no rule applies the honest output is `NoConclusion`:
//! pairs with a reversed area gap can genuinely be linked.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::descriptor::{TorusDescriptor, TorusKind};
use super::{a2, monotonicity, LatticeError};
use crate::numeric::Area;

pub const RULE_CLIFFORD_PAIR: &str = "clifford-pair-smooth-unlink";
pub const RULE_EQUAL_MONOTONE: &str = "equal-monotone-smooth-unlink";
pub const RULE_ENUMERATIVE_BASIS: &str = "enumerative-basis-smooth-unlink";
pub const RULE_SOLID_TORUS: &str = "monotone-solid-torus-bound";
pub const RULE_PI1: &str = "pi1-image-criterion";
pub const RULE_ADMISSIBLE_HOMOLOGICAL: &str = "admissible-homological-unlink";
pub const RULE_AREA_GAP: &str = "area-gap-no-conclusion";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerdictKind {
    NoConclusion,
    NeedsPi1Input,
    HomologicallyUnlinked,
    BoundsSolidTorusInComplement,
    SmoothlyUnlinked,
}

impl VerdictKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictKind::SmoothlyUnlinked => "smoothly_unlinked",
            VerdictKind::BoundsSolidTorusInComplement => "bounds_solid_torus_in_complement",
            VerdictKind::HomologicallyUnlinked => "homologically_unlinked",
            VerdictKind::NeedsPi1Input => "needs_pi1_input",
            VerdictKind::NoConclusion => "no_conclusion",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub conclusion: VerdictKind,
    /// L1 bounds a solid torus embedded in the complement of L2.
    pub bounds_solid_torus: bool,
    pub homologically_unlinked: bool,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(conclusion: VerdictKind) -> Verdict {
        Verdict {
            conclusion,
            bounds_solid_torus: false,
            homologically_unlinked: false,
            citations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn cite(mut self, rule: &str) -> Verdict {
        self.citations.push(String::from(rule));
        self
    }

    fn note(mut self, text: &str) -> Verdict {
        self.notes.push(String::from(text));
        self
    }
}

/// Decide what the encoded theorems say about unlinking L1 from L2.
/// `pi1_image_trivial` overrides the descriptor's recorded π₁ image.
pub fn unlinking_verdict(
    l1: &TorusDescriptor,
    l2: &TorusDescriptor,
    pi1_image_trivial: Option<bool>,
) -> Result<Verdict, LatticeError> {
    let a2_1 = a2(&l1.lattice)?;
    let a2_2 = a2(&l2.lattice)?;
    let mono1 = monotonicity(&l1.lattice);
    let mono2 = monotonicity(&l2.lattice);
    let a2_geq = a2_2.cmp_eps(&a2_1) != Ordering::Less;
    let pi1_trivial = pi1_image_trivial.or(l1.pi1_image_generator.map(|g| g == 0));

    // (a) two Clifford tori unlink regardless of their factors
    if l1.kind == TorusKind::Clifford && l2.kind == TorusKind::Clifford {
        let mut v = Verdict::new(VerdictKind::SmoothlyUnlinked).cite(RULE_CLIFFORD_PAIR);
        v.bounds_solid_torus = true;
        v.homologically_unlinked = true;
        return Ok(v);
    }
    // (b) both monotone with equal minimal areas
    if mono1.is_some() && mono2.is_some() && a2_1.approx_eq(&a2_2) {
        let mut v = Verdict::new(VerdictKind::SmoothlyUnlinked).cite(RULE_EQUAL_MONOTONE);
        v.bounds_solid_torus = true;
        v.homologically_unlinked = true;
        return Ok(v);
    }
    // (c) monotone with a recorded enumerative basis of unit disk counts
    if mono1.is_some() && a2_geq && l1.has_enumerative_basis() {
        let mut v = Verdict::new(VerdictKind::SmoothlyUnlinked)
            .cite(RULE_ENUMERATIVE_BASIS)
            .cite(RULE_SOLID_TORUS);
        v.bounds_solid_torus = true;
        v.homologically_unlinked = true;
        return Ok(v);
    }
    // (d) monotone with the favorable area gap: solid torus bound; smooth
    // unlinking then reduces to the pi1 image
    if mono1.is_some() && a2_geq {
        let mut v = match pi1_trivial {
            Some(true) => Verdict::new(VerdictKind::SmoothlyUnlinked)
                .cite(RULE_SOLID_TORUS)
                .cite(RULE_PI1),
            Some(false) => Verdict::new(VerdictKind::BoundsSolidTorusInComplement)
                .cite(RULE_SOLID_TORUS)
                .cite(RULE_PI1)
                .note("pi1 image nontrivial: the pair is smoothly linked by the same criterion"),
            None => Verdict::new(VerdictKind::NeedsPi1Input)
                .cite(RULE_SOLID_TORUS)
                .note("smooth unlinking is equivalent to the vanishing of the pi1 image"),
        };
        v.bounds_solid_torus = true;
        v.homologically_unlinked = true;
        return Ok(v);
    }
    // (e) admissible with the favorable area gap: homological unlinking
    if l1.admissible.admissible && a2_geq {
        let mut v =
            Verdict::new(VerdictKind::HomologicallyUnlinked).cite(RULE_ADMISSIBLE_HOMOLOGICAL);
        v.homologically_unlinked = true;
        return Ok(v);
    }
    // (f) nothing encoded applies; with a reversed area gap linked pairs exist
    Ok(Verdict::new(VerdictKind::NoConclusion)
        .cite(RULE_AREA_GAP)
        .note("no encoded criterion applies; pairs with the reversed area gap can be linked"))
}

/// Partition monotone tori into levels of equal A₂, in decreasing order.
/// Returns the index groups.
pub fn level_partition(tori: &[TorusDescriptor]) -> Result<Vec<Vec<usize>>, LatticeError> {
    let mut keyed: Vec<(Area, usize)> = Vec::with_capacity(tori.len());
    for (i, t) in tori.iter().enumerate() {
        if monotonicity(&t.lattice).is_none() {
            return Err(LatticeError::NonMonotoneInput);
        }
        keyed.push((a2(&t.lattice)?, i));
    }
    keyed.sort_by(|x, y| y.0.cmp_eps(&x.0).then(x.1.cmp(&y.1)));
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut current_area: Option<Area> = None;
    for (area, idx) in keyed {
        match (&current_area, levels.last_mut()) {
            (Some(a), Some(level)) if a.approx_eq(&area) => level.push(idx),
            _ => {
                levels.push(alloc::vec![idx]);
                current_area = Some(area);
            }
        }
    }
    Ok(levels)
}
