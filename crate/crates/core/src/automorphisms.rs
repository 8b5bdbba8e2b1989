//! Inner automorphisms restricted to normal subgroups, and instance checks of
//! the structural facts used about them: fixed-point-free involutions invert
//! abelian groups, the rational-group splitting statement, and the
//! class-size-two consequence.

use serde::{Deserialize, Serialize};

use crate::classes::{all_elements_prime_order, is_rational, ClassDecomposition};
use crate::error::{GroupError, Result};
use crate::group::{Element, FiniteGroup};
use crate::subgroups::{
    derived_subgroup, find_complement, is_elementary_abelian, is_p_group, sylow_subgroup, Subgroup,
};

/// Result of checking a predicate whose hypotheses may not hold.
///
/// `Inapplicable` is a vacuous truth: the hypotheses failed, so nothing was
/// verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepOutcome {
    Verified,
    Inapplicable,
    Failed,
}

impl StepOutcome {
    pub fn from_check(holds: bool) -> Self {
        if holds {
            StepOutcome::Verified
        } else {
            StepOutcome::Failed
        }
    }

    /// `true` unless the check failed.
    pub fn holds(self) -> bool {
        self != StepOutcome::Failed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepOutcome::Verified => "verified",
            StepOutcome::Inapplicable => "inapplicable",
            StepOutcome::Failed => "failed",
        }
    }
}

/// `φ_h(x) = h⁻¹ x h` on a normal subgroup `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedConjugation {
    conjugator: Element,
    domain: Vec<Element>,
    images: Vec<Element>,
    /// position of each parent element in `domain`, `usize::MAX` outside it
    slot: Vec<usize>,
}

impl RestrictedConjugation {
    pub fn conjugator(&self) -> Element {
        self.conjugator
    }

    pub fn domain(&self) -> &[Element] {
        &self.domain
    }

    pub fn apply(&self, x: Element) -> Element {
        self.images[self.slot[x.index()]]
    }

    pub fn is_identity_map(&self) -> bool {
        self.domain.iter().zip(&self.images).all(|(a, b)| a == b)
    }
}

/// Builds `φ_h` on `normal`, checking that it is a product-preserving bijection.
pub fn conjugation_on(
    group: &FiniteGroup,
    h: Element,
    normal: &Subgroup,
) -> Result<RestrictedConjugation> {
    if !normal.is_normal(group) {
        return Err(GroupError::NotNormal {
            order: normal.order(),
        });
    }
    let domain = normal.elements();
    let mut slot = vec![usize::MAX; group.order()];
    for (i, &x) in domain.iter().enumerate() {
        slot[x.index()] = i;
    }
    let images: Vec<Element> = domain.iter().map(|&x| group.conjugate(x, h)).collect();

    let mut hit = vec![false; domain.len()];
    for &y in &images {
        let s = slot[y.index()];
        if s == usize::MAX || std::mem::replace(&mut hit[s], true) {
            return Err(GroupError::Internal(
                "conjugation is not a bijection on N".into(),
            ));
        }
    }
    let phi = RestrictedConjugation {
        conjugator: h,
        domain,
        images,
        slot,
    };
    for &a in &phi.domain {
        for &b in &phi.domain {
            if phi.apply(group.mul(a, b)) != group.mul(phi.apply(a), phi.apply(b)) {
                return Err(GroupError::Internal(
                    "conjugation does not preserve products".into(),
                ));
            }
        }
    }
    Ok(phi)
}

/// Least `t ≥ 1` with `φ^t = id`.
pub fn automorphism_order(phi: &RestrictedConjugation) -> usize {
    let mut current: Vec<Element> = phi.images.clone();
    let mut t = 1;
    while current.iter().zip(&phi.domain).any(|(a, b)| a != b) {
        current = current.iter().map(|&y| phi.apply(y)).collect();
        t += 1;
    }
    t
}

/// `φ(x) ≠ x` for every non-identity `x` in the domain.
pub fn is_fixed_point_free(phi: &RestrictedConjugation) -> bool {
    phi.domain
        .iter()
        .zip(&phi.images)
        .all(|(x, y)| x.is_identity() || x != y)
}

/// `φ(x) = x⁻¹` throughout the domain.
pub fn is_inversion(group: &FiniteGroup, phi: &RestrictedConjugation) -> bool {
    phi.domain
        .iter()
        .zip(&phi.images)
        .all(|(&x, &y)| y == group.inv(x))
}

/// When `φ_h` is a fixed-point-free automorphism of order 2 on `normal`,
/// checks that `normal` is abelian and `φ_h` is inversion. Otherwise the
/// hypothesis fails and the outcome is [`StepOutcome::Inapplicable`].
pub fn verify_fpf_consequence(
    group: &FiniteGroup,
    h: Element,
    normal: &Subgroup,
) -> Result<StepOutcome> {
    let phi = conjugation_on(group, h, normal)?;
    if automorphism_order(&phi) != 2 || !is_fixed_point_free(&phi) {
        return Ok(StepOutcome::Inapplicable);
    }
    Ok(StepOutcome::from_check(
        normal.is_abelian(group) && is_inversion(group, &phi),
    ))
}

/// Instance check of the splitting statement for rational groups with an
/// abelian Sylow 2-subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop1Report {
    pub rational: bool,
    pub sylow2_abelian: bool,
    pub sylow2_elementary: bool,
    pub splits_over_derived: bool,
    pub derived_is_3group: bool,
    pub applicable: bool,
    /// Present only when `applicable`.
    pub pass: Option<bool>,
}

impl Prop1Report {
    pub fn outcome(&self) -> StepOutcome {
        match self.pass {
            None => StepOutcome::Inapplicable,
            Some(p) => StepOutcome::from_check(p),
        }
    }
}

pub fn verify_proposition1(group: &FiniteGroup, dec: &ClassDecomposition) -> Result<Prop1Report> {
    let rational = is_rational(group, dec);
    let sylow2 = sylow_subgroup(group, 2)?;
    let sylow2_abelian = sylow2.is_abelian(group);
    let sylow2_elementary = is_elementary_abelian(group, &sylow2, 2);
    let derived = derived_subgroup(group);
    let splits_over_derived = find_complement(group, &derived)?.splits;
    let derived_is_3group = is_p_group(&derived, 3);
    let applicable = group.order().is_multiple_of(2) && rational && sylow2_abelian;
    Ok(Prop1Report {
        rational,
        sylow2_abelian,
        sylow2_elementary,
        splits_over_derived,
        derived_is_3group,
        applicable,
        pass: applicable.then_some(sylow2_elementary && splits_over_derived && derived_is_3group),
    })
}

/// In a non-abelian rational group of even order whose elements all have
/// prime order, split over `G'` by a complement acting on `G'` by inversion:
/// every non-identity element of `G'` has class size 2 and `|G| = 2·3^b`
/// with `b ≥ 1`. Inapplicable when that context does not hold.
pub fn class_size_two_in_derived(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
) -> Result<StepOutcome> {
    if group.is_abelian()
        || !group.order().is_multiple_of(2)
        || !all_elements_prime_order(group)
        || !is_rational(group, dec)
    {
        return Ok(StepOutcome::Inapplicable);
    }
    let derived = derived_subgroup(group);
    let Some(complement) = find_complement(group, &derived)?.complement else {
        return Ok(StepOutcome::Inapplicable);
    };
    for h in complement
        .elements()
        .into_iter()
        .filter(|h| !h.is_identity())
    {
        if !is_inversion(group, &conjugation_on(group, h, &derived)?) {
            return Ok(StepOutcome::Inapplicable);
        }
    }

    let sizes_two = derived
        .elements()
        .iter()
        .filter(|x| !x.is_identity())
        .all(|&x| dec.class(dec.class_of(x)).size() == 2);
    let mut rest = group.order() / 2;
    let mut b = 0;
    while rest.is_multiple_of(3) {
        rest /= 3;
        b += 1;
    }
    Ok(StepOutcome::from_check(
        sizes_two && group.order().is_multiple_of(2) && rest == 1 && b >= 1,
    ))
}
