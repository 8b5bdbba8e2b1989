//! Unit-fraction decompositions of 1 with a fixed number of terms.
//!
//! Every finite group with `k` conjugacy classes yields such a decomposition
//! through its class equation (`m_i = |G| / |C_i|`), so the largest leading
//! denominator over all `k`-term solutions bounds the order of the group.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classes::class_equation;
use crate::error::{GroupError, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;

/// Default cap on the number of terms.
pub const DEFAULT_TERMS_CAP: usize = 7;

/// A non-negative rational in lowest terms. All arithmetic is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    numerator: u128,
    denominator: u128,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction {
        numerator: 0,
        denominator: 1,
    };
    pub const ONE: Fraction = Fraction {
        numerator: 1,
        denominator: 1,
    };

    pub fn new(numerator: u128, denominator: u128) -> Result<Self> {
        if denominator == 0 {
            return Err(GroupError::BadParameter("zero denominator".into()));
        }
        let g = numerator.gcd(&denominator);
        Ok(Fraction {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn integer(n: u128) -> Self {
        Fraction {
            numerator: n,
            denominator: 1,
        }
    }

    /// `1 / m`.
    pub fn unit(m: u128) -> Result<Self> {
        Self::new(1, m)
    }

    pub fn numerator(&self) -> u128 {
        self.numerator
    }

    pub fn denominator(&self) -> u128 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    pub fn checked_add(self, other: Fraction) -> Result<Fraction> {
        let l = self.denominator.lcm(&other.denominator);
        let a = self
            .numerator
            .checked_mul(l / self.denominator)
            .ok_or(GroupError::Overflow)?;
        let b = other
            .numerator
            .checked_mul(l / other.denominator)
            .ok_or(GroupError::Overflow)?;
        Self::new(a.checked_add(b).ok_or(GroupError::Overflow)?, l)
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(self, other: Fraction) -> Result<Option<Fraction>> {
        let l = self.denominator.lcm(&other.denominator);
        let a = self
            .numerator
            .checked_mul(l / self.denominator)
            .ok_or(GroupError::Overflow)?;
        let b = other
            .numerator
            .checked_mul(l / other.denominator)
            .ok_or(GroupError::Overflow)?;
        match a.checked_sub(b) {
            Some(d) => Self::new(d, l).map(Some),
            None => Ok(None),
        }
    }

    pub fn checked_mul(self, other: Fraction) -> Result<Fraction> {
        let g1 = self.numerator.gcd(&other.denominator).max(1);
        let g2 = other.numerator.gcd(&self.denominator).max(1);
        let n = (self.numerator / g1)
            .checked_mul(other.numerator / g2)
            .ok_or(GroupError::Overflow)?;
        let d = (self.denominator / g2)
            .checked_mul(other.denominator / g1)
            .ok_or(GroupError::Overflow)?;
        Self::new(n, d)
    }

    pub fn checked_div(self, other: Fraction) -> Result<Fraction> {
        if other.is_zero() {
            return Err(GroupError::BadParameter("division by zero".into()));
        }
        self.checked_mul(Fraction {
            numerator: other.denominator,
            denominator: other.numerator,
        })
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (
            self.numerator.checked_mul(other.denominator),
            other.numerator.checked_mul(self.denominator),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            // Compare integer parts, then the reciprocals of the remainders.
            _ => {
                let (qa, ra) = self.numerator.div_rem(&self.denominator);
                let (qb, rb) = other.numerator.div_rem(&other.denominator);
                qa.cmp(&qb).then_with(|| match (ra, rb) {
                    (0, 0) => Ordering::Equal,
                    (0, _) => Ordering::Less,
                    (_, 0) => Ordering::Greater,
                    _ => Fraction::new(other.denominator, rb)
                        .unwrap()
                        .cmp(&Fraction::new(self.denominator, ra).unwrap()),
                })
            }
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Denominators `m_1 ≥ m_2 ≥ … ≥ m_k` with `Σ 1/m_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnitFractionSolution {
    denominators: Vec<u128>,
}

impl UnitFractionSolution {
    /// Validates ordering and the exact unit-fraction identity.
    pub fn new(denominators: Vec<u128>) -> Result<Self> {
        if denominators.is_empty() {
            return Err(GroupError::BadParameter("empty solution".into()));
        }
        if denominators.windows(2).any(|w| w[0] < w[1]) {
            return Err(GroupError::BadParameter(format!(
                "denominators {denominators:?} are not weakly descending"
            )));
        }
        let sum = unit_fraction_sum(&denominators)?;
        if sum != Fraction::ONE {
            return Err(GroupError::BadParameter(format!(
                "reciprocals of {denominators:?} sum to {sum}, not 1"
            )));
        }
        Ok(UnitFractionSolution { denominators })
    }

    pub fn denominators(&self) -> &[u128] {
        &self.denominators
    }

    pub fn terms(&self) -> usize {
        self.denominators.len()
    }

    pub fn to_csv_line(&self) -> String {
        let parts: Vec<String> = self.denominators.iter().map(|m| m.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for UnitFractionSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.denominators.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Σ 1/m` in exact arithmetic.
pub fn unit_fraction_sum(denominators: &[u128]) -> Result<Fraction> {
    denominators.iter().try_fold(Fraction::ZERO, |acc, &m| {
        acc.checked_add(Fraction::unit(m)?)
    })
}

/// Enumeration settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LandauConfig {
    pub terms_cap: usize,
    pub execution: Execution,
}

impl Default for LandauConfig {
    fn default() -> Self {
        LandauConfig {
            terms_cap: DEFAULT_TERMS_CAP,
            execution: Execution::default(),
        }
    }
}

/// All `k`-term solutions, each listed with descending denominators, the
/// list sorted lexicographically ascending.
///
/// Denominators are chosen smallest first. With remaining target `r` and `j`
/// terms left, the next denominator `m` satisfies `m ≥ previous`,
/// `1/m < r` (or `1/m = r` on the last term) and `m ≤ j / r`.
pub fn landau_solutions(k: usize, config: &LandauConfig) -> Result<Vec<UnitFractionSolution>> {
    if k == 0 || k > config.terms_cap {
        return Err(GroupError::CapExceeded {
            k,
            cap: config.terms_cap,
        });
    }

    let raw = extend(config.execution, Fraction::ONE, k, Vec::new())?;

    let mut solutions = Vec::new();
    for mut ascending in raw {
        ascending.reverse();
        solutions.push(UnitFractionSolution::new(ascending)?);
    }
    solutions.sort();
    Ok(solutions)
}

/// Next-denominator bounds for `j` remaining terms summing to `r`.
fn candidate_range(r: Fraction, j: usize, min: u128) -> Result<std::ops::RangeInclusive<u128>> {
    let (p, q) = (r.numerator(), r.denominator());
    let empty = std::ops::RangeInclusive::new(1, 0);
    if p == 0 {
        return Ok(empty);
    }
    if j == 1 {
        return Ok(if p == 1 && q >= min { q..=q } else { empty });
    }
    let lo = (q / p + 1).max(min);
    let hi = (j as u128).checked_mul(q).ok_or(GroupError::Overflow)? / p;
    Ok(lo..=hi)
}

/// Completes `prefix` (ascending denominators, remaining target `r`) in all
/// possible ways.
fn extend(exec: Execution, r: Fraction, k: usize, prefix: Vec<u128>) -> Result<Vec<Vec<u128>>> {
    let j = k - prefix.len();
    let min = prefix.last().copied().unwrap_or(1);
    let (p, q) = (r.numerator(), r.denominator());
    if j == 0 {
        return Ok(if r.is_zero() {
            vec![prefix]
        } else {
            Vec::new()
        });
    }
    if j == 2 {
        // 1/a + 1/b = p/q  ⇔  b = qa / (pa − q), an integer no smaller than a.
        let mut out = Vec::new();
        for a in candidate_range(r, 2, min)? {
            let num = p.checked_mul(a).ok_or(GroupError::Overflow)? - q;
            let den = q.checked_mul(a).ok_or(GroupError::Overflow)?;
            if den % num == 0 {
                let mut s = prefix.clone();
                s.extend([a, den / num]);
                out.push(s);
            }
        }
        return Ok(out);
    }

    let candidates: Vec<u128> = candidate_range(r, j, min)?.collect();
    let branch = |&m: &u128| -> Result<Vec<Vec<u128>>> {
        match r.checked_sub(Fraction::unit(m)?)? {
            Some(rest) => {
                let mut p = prefix.clone();
                p.push(m);
                extend(exec, rest, k, p)
            }
            None => Ok(Vec::new()),
        }
    };
    let mode = if j > 3 { exec } else { Execution::Sequential };
    let mut out = Vec::new();
    for part in mode.map(&candidates, branch) {
        out.extend(part?);
    }
    Ok(out)
}

/// Largest possible order of a group with `k` conjugacy classes: the maximum
/// leading denominator over all `k`-term solutions.
pub fn max_order_bound(k: usize, config: &LandauConfig) -> Result<u128> {
    let solutions = landau_solutions(k, config)?;
    solutions
        .iter()
        .map(|s| s.denominators()[0])
        .max()
        .ok_or_else(|| GroupError::Internal(format!("no solutions for k = {k}")))
}

/// Closed form of [`max_order_bound`] valid for every `k`: `s_k − 1` for
/// Sylvester's sequence `s_1 = 2`, `s_{j+1} = s_j² − s_j + 1`. Needs no
/// enumeration, so it also covers class numbers above the terms cap.
pub fn sylvester_bound(k: usize) -> Result<u128> {
    if k == 0 {
        return Err(GroupError::BadParameter("k must be positive".into()));
    }
    let mut s: u128 = 2;
    for _ in 1..k {
        s = s
            .checked_mul(s - 1)
            .and_then(|v| v.checked_add(1))
            .ok_or(GroupError::Overflow)?;
    }
    Ok(s - 1)
}

/// The class equation of `group` as a unit-fraction solution, checked against
/// the full enumeration for `k(G)` terms.
pub fn matches_landau(group: &FiniteGroup, config: &LandauConfig) -> Result<UnitFractionSolution> {
    let eq = class_equation(group);
    let mut denominators: Vec<u128> = eq.indices().iter().map(|&m| m as u128).collect();
    denominators.sort_unstable_by(|a, b| b.cmp(a));
    let solution = UnitFractionSolution::new(denominators)?;
    let all = landau_solutions(solution.terms(), config)?;
    if all.binary_search(&solution).is_err() {
        return Err(GroupError::Internal(format!(
            "class equation {solution} missing from the {}-term enumeration",
            solution.terms()
        )));
    }
    Ok(solution)
}
