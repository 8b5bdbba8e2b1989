//! Subgroup closure and membership tests, derived subgroups, Sylow subgroups
//! and complements of normal subgroups.

use itertools::Itertools;

use crate::bitset::ElementSet;
use crate::classes::is_prime;
use crate::error::{GroupError, Result};
use crate::group::{Element, FiniteGroup};

/// A subgroup of some parent group, stored as a bitset over the parent's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: ElementSet,
}

impl Subgroup {
    /// Wraps `members` after checking the subgroup axioms against `group`.
    pub fn new(group: &FiniteGroup, members: ElementSet) -> Result<Self> {
        if members.capacity() != group.order() || !is_subgroup(group, &members) {
            return Err(GroupError::PreconditionViolated(format!(
                "{members:?} is not a subgroup"
            )));
        }
        Ok(Subgroup { members })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup {
            members: ElementSet::from_elements(group.order(), [Element::IDENTITY]),
        }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            members: ElementSet::full(group.order()),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// Members in ascending order.
    pub fn elements(&self) -> Vec<Element> {
        self.members.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self, group: &FiniteGroup) -> bool {
        let els = self.elements();
        els.iter()
            .tuple_combinations()
            .all(|(&a, &b)| group.mul(a, b) == group.mul(b, a))
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        let els = self.elements();
        group
            .elements()
            .all(|g| els.iter().all(|&x| self.contains(group.conjugate(x, g))))
    }
}

/// Least subgroup containing `seed`.
pub fn generated_subgroup<I>(group: &FiniteGroup, seed: I) -> Subgroup
where
    I: IntoIterator<Item = Element>,
{
    closure_within(group, seed, usize::MAX).expect("unbounded closure")
}

/// Closure of `seed`, abandoned once it exceeds `limit` elements.
fn closure_within<I>(group: &FiniteGroup, seed: I, limit: usize) -> Option<Subgroup>
where
    I: IntoIterator<Item = Element>,
{
    let gens: Vec<Element> = seed
        .into_iter()
        .filter(|g| !g.is_identity())
        .unique()
        .collect();
    let mut members = ElementSet::from_elements(group.order(), [Element::IDENTITY]);
    let mut queue = vec![Element::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in &gens {
            let y = group.mul(x, g);
            if members.insert(y) {
                if queue.len() >= limit {
                    return None;
                }
                queue.push(y);
            }
        }
    }
    Some(Subgroup { members })
}

/// Contains the identity and is closed under products; `|subset|` must
/// divide `|G|`. Inverse closure follows by finiteness.
pub fn is_subgroup(group: &FiniteGroup, subset: &ElementSet) -> bool {
    let size = subset.len();
    if size == 0 || !group.order().is_multiple_of(size) || !subset.contains(Element::IDENTITY) {
        return false;
    }
    let els = subset.to_vec();
    els.iter()
        .all(|&a| els.iter().all(|&b| subset.contains(group.mul(a, b))))
}

/// `G'`, generated by all commutators `x⁻¹y⁻¹xy`.
pub fn derived_subgroup(group: &FiniteGroup) -> Subgroup {
    let mut commutators = ElementSet::new(group.order());
    for x in group.elements() {
        for y in group.elements() {
            commutators.insert(group.commutator(x, y));
        }
    }
    let derived = generated_subgroup(group, commutators.iter());
    assert!(derived.is_normal(group), "derived subgroup must be normal");
    derived
}

/// The p-part of `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut part = 1;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        part *= p;
    }
    part
}

fn is_power_of(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

/// A Sylow p-subgroup, grown greedily from the trivial subgroup by adjoining
/// p-elements while the closure stays a p-group.
pub fn sylow_subgroup(group: &FiniteGroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let p = p as usize;
    let target = p_part(group.order(), p);
    let p_elements: Vec<Element> = group
        .elements()
        .filter(|&x| !x.is_identity() && is_power_of(group.element_order(x), p))
        .collect();

    let mut current = Subgroup::trivial(group);
    'grow: while current.order() < target {
        for &x in &p_elements {
            if current.contains(x) {
                continue;
            }
            let seed = current.elements().into_iter().chain([x]);
            if let Some(candidate) = closure_within(group, seed, target) {
                if is_power_of(candidate.order(), p) {
                    current = candidate;
                    continue 'grow;
                }
            }
        }
        break;
    }
    if current.order() != target {
        return Err(GroupError::Internal(format!(
            "maximal {p}-subgroup has order {}, expected {target}",
            current.order()
        )));
    }
    Ok(current)
}

/// Every non-identity element of `h` has order `p` and `h` is abelian.
pub fn is_elementary_abelian(group: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    h.is_abelian(group)
        && h.elements()
            .iter()
            .filter(|x| !x.is_identity())
            .all(|&x| group.element_order(x) as u64 == p)
}

/// `|h|` is a power of `p` (including `p⁰`).
pub fn is_p_group(h: &Subgroup, p: u64) -> bool {
    is_power_of(h.order(), p as usize)
}

/// Outcome of a complement search for a normal subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub normal: Subgroup,
    pub complement: Option<Subgroup>,
    pub splits: bool,
}

/// Searches for `H` with `G = NH` and `N ∩ H = 1`.
///
/// Candidates are closures of generating sets of at most
/// `ceil(log2(|G|/|N|))` elements taken from outside `N`, enumerated in
/// lexicographic element order; the first complement found is returned.
pub fn find_complement(group: &FiniteGroup, normal: &Subgroup) -> Result<SplitReport> {
    if !normal.is_normal(group) {
        return Err(GroupError::NotNormal {
            order: normal.order(),
        });
    }
    let target = group.order() / normal.order();
    let found = if target == 1 {
        Some(Subgroup::trivial(group))
    } else {
        let max_gens = usize::BITS - (target - 1).leading_zeros();
        // Elements of a complement outside the identity avoid N and have
        // order dividing |H|.
        let candidates: Vec<Element> = group
            .elements()
            .filter(|&x| !normal.contains(x) && target.is_multiple_of(group.element_order(x)))
            .collect();
        (1..=max_gens as usize)
            .flat_map(|size| candidates.iter().copied().combinations(size))
            .find_map(|gens| {
                closure_within(group, gens, target).filter(|h| {
                    h.order() == target && h.members().intersection(normal.members()).len() == 1
                })
            })
    };

    let report = SplitReport {
        normal: normal.clone(),
        splits: found.is_some(),
        complement: found,
    };
    if let Some(h) = &report.complement {
        let meet = h.members().intersection(normal.members()).len();
        let mut product = ElementSet::new(group.order());
        for n in normal.elements() {
            for x in h.elements() {
                product.insert(group.mul(n, x));
            }
        }
        if normal.order() * h.order() != group.order()
            || meet != 1
            || product.len() != group.order()
        {
            return Err(GroupError::Internal("complement failed validation".into()));
        }
    }
    Ok(report)
}
