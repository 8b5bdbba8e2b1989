//! Unions of conjugacy classes and the invariant `m(G)`: the least `n` such
//! that for every choice of `n` distinct non-trivial classes, their union
//! together with the identity is a subgroup.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::classes::ClassDecomposition;
use crate::error::{GroupError, Result};
use crate::exec::Execution;
use crate::group::{Element, FiniteGroup};
use crate::landau::Fraction;
use crate::subgroups::is_subgroup;

/// A non-empty set of non-identity class indices, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassSubset {
    indices: Vec<usize>,
}

impl ClassSubset {
    pub fn new(dec: &ClassDecomposition, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(GroupError::BadParameter("empty class subset".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i >= dec.k()) {
            return Err(GroupError::BadParameter(format!(
                "class index {bad} is not a non-identity class (k = {})",
                dec.k()
            )));
        }
        Ok(ClassSubset { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// `{1} ∪ C_{i_1} ∪ … ∪ C_{i_n}`.
pub fn union_with_identity(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
    s: &ClassSubset,
) -> ElementSet {
    let mut set = ElementSet::from_elements(group.order(), [Element::IDENTITY]);
    for &i in s.indices() {
        for &x in dec.class(i).members() {
            set.insert(x);
        }
    }
    set
}

/// Whether the identity plus the chosen classes form a subgroup.
///
/// The union is conjugation-invariant, so closure only needs checking for
/// products `r·y` with `r` a class representative and `y` in the union:
/// `(g⁻¹rg)·y ∈ S` iff `r·(gyg⁻¹) ∈ S`.
pub fn is_class_union_subgroup(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
    s: &ClassSubset,
) -> bool {
    let size = 1 + s
        .indices()
        .iter()
        .map(|&i| dec.class(i).size())
        .sum::<usize>();
    if !group.order().is_multiple_of(size) {
        return false;
    }
    let set = union_with_identity(group, dec, s);
    let members = set.to_vec();
    s.indices().iter().all(|&i| {
        let r = dec.class(i).representative();
        members.iter().all(|&y| set.contains(group.mul(r, y)))
    })
}

/// `m(G)` with `k(G)` and, for each `n < m`, the lexicographically first
/// `n`-subset of classes whose union with the identity is not a subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MInvariantResult {
    pub m: usize,
    pub k: usize,
    pub counterexamples: BTreeMap<usize, ClassSubset>,
}

pub fn m_invariant(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
    exec: Execution,
) -> Result<MInvariantResult> {
    let k = dec.k();
    if k < 2 {
        return Err(GroupError::DegenerateGroup);
    }
    let mut counterexamples = BTreeMap::new();
    for n in 1..k {
        let subsets: Vec<ClassSubset> = (1..k)
            .combinations(n)
            .map(|indices| ClassSubset { indices })
            .collect();
        match exec.position_first(&subsets, |s| !is_class_union_subgroup(group, dec, s)) {
            Some(pos) => {
                let witness = subsets[pos].clone();
                // Independent re-check through the generic subgroup test.
                if is_subgroup(group, &union_with_identity(group, dec, &witness)) {
                    return Err(GroupError::Internal(format!(
                        "witness {:?} is a subgroup on re-check",
                        witness.indices()
                    )));
                }
                counterexamples.insert(n, witness);
            }
            None => {
                return Ok(MInvariantResult {
                    m: n,
                    k,
                    counterexamples,
                })
            }
        }
    }
    Err(GroupError::Internal(
        "the union of all classes must be the whole group".into(),
    ))
}

/// For abelian `G`: with `H = 1 ∪ C_1 ∪ … ∪ C_m` and
/// `K = 1 ∪ C_1 ∪ … ∪ C_{m-1} ∪ C_{m+1}` (canonical class order), returns
/// `|H|·|K| / |H ∩ K|` when both are subgroups, and `0` otherwise.
///
/// If both were subgroups this value would be `(m+1)²/m`, not an integer for
/// `m ≥ 2`, so the non-zero branch is never expected to occur.
pub fn abelian_hk_certificate(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
    m: usize,
) -> Result<Fraction> {
    if !group.is_abelian() {
        return Err(GroupError::PreconditionViolated(
            "group is not abelian".into(),
        ));
    }
    if m < 2 || m + 2 > dec.k() {
        return Err(GroupError::PreconditionViolated(format!(
            "m = {m} outside 2..={}",
            dec.k().saturating_sub(2)
        )));
    }
    let h = ClassSubset::new(dec, (1..=m).collect())?;
    let k = ClassSubset::new(dec, (1..m).chain([m + 1]).collect())?;
    let (hs, ks) = (
        union_with_identity(group, dec, &h),
        union_with_identity(group, dec, &k),
    );
    if !is_subgroup(group, &hs) || !is_subgroup(group, &ks) {
        return Ok(Fraction::ZERO);
    }
    let meet = hs.intersection(&ks).len() as u128;
    Fraction::new(hs.len() as u128 * ks.len() as u128, meet)
}

/// `(m+1)² / m`, the order `|HK|` would have in the abelian case.
pub fn hk_formula(m: u128) -> Result<Fraction> {
    let num = (m + 1).checked_mul(m + 1).ok_or(GroupError::Overflow)?;
    Fraction::new(num, m)
}
