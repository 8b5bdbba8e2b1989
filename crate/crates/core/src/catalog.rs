//! Named group constructors and the string syntax used to select them:
//! `C12`, `E2^3`, `D4`, `S4`, `A5`, `Q8`, `C2xC3`, `file:path.cay`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, PermutationGenerators, DEFAULT_CLOSURE_CAP};

/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CLOSURE_CAP_ENV: &str = "CLASSUNION_CLOSURE_CAP";

/// Closure cap from the environment, or the default.
pub fn closure_cap_from_env() -> Result<usize> {
    match std::env::var(CLOSURE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| GroupError::BadParameter(format!("{CLOSURE_CAP_ENV}={v:?}"))),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpecifier {
    Cyclic(usize),
    /// `C2^r`
    ElementaryAbelian2(u32),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Product(Box<GroupSpecifier>, Box<GroupSpecifier>),
    File(PathBuf),
}

impl GroupSpecifier {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(GroupError::BadParameter("empty file path".into()));
            }
            return Ok(GroupSpecifier::File(PathBuf::from(path)));
        }
        let factors: Vec<&str> = s.split(['x', 'X', '*']).collect();
        if factors.len() > 1 {
            let mut parts = factors.into_iter().map(Self::parse_atom);
            let first = parts.next().expect("split yields at least one part")?;
            return parts.try_fold(first, |acc, f| {
                Ok(GroupSpecifier::Product(Box::new(acc), Box::new(f?)))
            });
        }
        Self::parse_atom(s)
    }

    fn parse_atom(s: &str) -> Result<Self> {
        let bad = || GroupError::BadParameter(format!("unrecognized group specifier {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if s == "Q8" {
            return Ok(GroupSpecifier::Quaternion8);
        }
        if let Some(r) = s.strip_prefix("E2^") {
            return Ok(GroupSpecifier::ElementaryAbelian2(
                r.parse().map_err(|_| bad())?,
            ));
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let n = num(chars.as_str())?;
        match head {
            'C' => Ok(GroupSpecifier::Cyclic(n)),
            'D' => Ok(GroupSpecifier::Dihedral(n)),
            'S' => Ok(GroupSpecifier::Symmetric(n)),
            'A' => Ok(GroupSpecifier::Alternating(n)),
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_CLOSURE_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let check = |n: usize| {
            if n > cap {
                Err(GroupError::ClosureCapExceeded { cap })
            } else {
                Ok(n)
            }
        };
        let group = match self {
            GroupSpecifier::Cyclic(n) => {
                let n = *n;
                if n == 0 {
                    return Err(GroupError::BadParameter("C0 is not a group".into()));
                }
                FiniteGroup::from_fn(check(n)?, |i, j| (i + j) % n)?
            }
            GroupSpecifier::ElementaryAbelian2(r) => {
                let n = 1usize
                    .checked_shl(*r)
                    .filter(|&n| n <= cap)
                    .ok_or(GroupError::ClosureCapExceeded { cap })?;
                FiniteGroup::from_fn(n, |i, j| i ^ j)?
            }
            GroupSpecifier::Dihedral(n) => {
                let n = *n;
                if n == 0 {
                    return Err(GroupError::BadParameter("D0 is not a group".into()));
                }
                // r^a s^b ↦ a + n·b, using s r = r⁻¹ s.
                FiniteGroup::from_fn(check(2 * n)?, |x, y| {
                    let (a1, b1) = (x % n, x / n);
                    let (a2, b2) = (y % n, y / n);
                    let a = if b1 == 0 { a1 + a2 } else { a1 + n - a2 } % n;
                    a + n * ((b1 + b2) % 2)
                })?
            }
            GroupSpecifier::Symmetric(n) => {
                let n = *n;
                if n == 0 {
                    return Err(GroupError::BadParameter("S0 is not supported".into()));
                }
                let gens = if n == 1 {
                    vec![]
                } else {
                    vec![
                        cycle_perm(n, &[0, 1]),
                        cycle_perm(n, &(0..n).collect::<Vec<_>>()),
                    ]
                };
                FiniteGroup::from_permutations(&PermutationGenerators::new(n, gens)?, cap)?
            }
            GroupSpecifier::Alternating(n) => {
                let n = *n;
                if n == 0 {
                    return Err(GroupError::BadParameter("A0 is not supported".into()));
                }
                let long: Vec<usize> = if n % 2 == 1 {
                    (0..n).collect()
                } else {
                    (1..n).collect()
                };
                let gens = if n < 3 {
                    vec![]
                } else {
                    vec![cycle_perm(n, &[0, 1, 2]), cycle_perm(n, &long)]
                };
                FiniteGroup::from_permutations(&PermutationGenerators::new(n, gens)?, cap)?
            }
            GroupSpecifier::Quaternion8 => {
                check(8)?;
                FiniteGroup::from_fn(8, quaternion_product)?
            }
            GroupSpecifier::Product(a, b) => {
                let (ga, gb) = (a.build_with_cap(cap)?, b.build_with_cap(cap)?);
                ga.direct_product(&gb, cap)?
            }
            GroupSpecifier::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| GroupError::FileParse(format!("{}: {e}", path.display())))?;
                let g = FiniteGroup::parse_cayley(&text)?;
                check(g.order())?;
                g
            }
        };
        Ok(group.with_name(self.to_string()))
    }

    /// Values of `m(G)` asserted for this group by the published
    /// classification of groups with `m(G) ≤ 3`, matched on the specifier.
    /// Elementary abelian 2-groups are claimed to have `m = 1`; the explicit
    /// lists name `C3`, `S3` for `m = 2` and `C4`, `C2×C2`, `D4`, `A5` for
    /// `m = 3`. `C2×C2` therefore collects two conflicting claims.
    pub fn classification_claims(&self) -> Vec<usize> {
        use GroupSpecifier::*;
        let mut claims = Vec::new();
        if self.elementary_abelian_rank().is_some_and(|r| r >= 1) {
            claims.push(1);
        }
        match self {
            Cyclic(3) | Symmetric(3) | Dihedral(3) => claims.push(2),
            Cyclic(4) | Dihedral(4) | Alternating(5) => claims.push(3),
            _ if self.elementary_abelian_rank() == Some(2) => claims.push(3),
            _ => {}
        }
        claims
    }

    /// Rank `r` if the specifier syntactically denotes `C2^r`.
    fn elementary_abelian_rank(&self) -> Option<u32> {
        match self {
            GroupSpecifier::Cyclic(1) => Some(0),
            GroupSpecifier::Cyclic(2) => Some(1),
            GroupSpecifier::ElementaryAbelian2(r) => Some(*r),
            GroupSpecifier::Dihedral(1) => Some(1),
            GroupSpecifier::Dihedral(2) => Some(2),
            GroupSpecifier::Symmetric(2) => Some(1),
            GroupSpecifier::Product(a, b) => {
                Some(a.elementary_abelian_rank()? + b.elementary_abelian_rank()?)
            }
            _ => None,
        }
    }
}

impl FromStr for GroupSpecifier {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for GroupSpecifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpecifier::Cyclic(n) => write!(f, "C{n}"),
            GroupSpecifier::ElementaryAbelian2(r) => write!(f, "E2^{r}"),
            GroupSpecifier::Dihedral(n) => write!(f, "D{n}"),
            GroupSpecifier::Symmetric(n) => write!(f, "S{n}"),
            GroupSpecifier::Alternating(n) => write!(f, "A{n}"),
            GroupSpecifier::Quaternion8 => write!(f, "Q8"),
            GroupSpecifier::Product(a, b) => write!(f, "{a}x{b}"),
            GroupSpecifier::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// The single cycle `cycle` as a permutation of `0..degree`.
fn cycle_perm(degree: usize, cycle: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (k, &x) in cycle.iter().enumerate() {
        p[x] = cycle[(k + 1) % cycle.len()];
    }
    p
}

/// Units `±1, ±i, ±j, ±k` indexed as `unit + 4·sign` with units `1, i, j, k = 0..4`.
fn quaternion_product(x: usize, y: usize) -> usize {
    let (u, su) = (x % 4, x / 4);
    let (v, sv) = (y % 4, y / 4);
    // (unit, negated) for u·v
    let (w, neg) = match (u, v) {
        (0, v) => (v, false),
        (u, 0) => (u, false),
        (u, v) if u == v => (0, true),
        (1, 2) => (3, false),
        (2, 3) => (1, false),
        (3, 1) => (2, false),
        (2, 1) => (3, true),
        (3, 2) => (1, true),
        (1, 3) => (2, true),
        _ => unreachable!(),
    };
    w + 4 * ((su + sv + neg as usize) % 2)
}

/// Specifiers of the default verification catalog.
pub fn default_catalog_specifiers() -> Vec<GroupSpecifier> {
    use GroupSpecifier::*;
    let mut specs: Vec<GroupSpecifier> = (1..=12).map(Cyclic).collect();
    specs.extend((1..=4).map(ElementaryAbelian2));
    specs.extend((3..=8).map(Dihedral));
    specs.extend([
        Symmetric(3),
        Symmetric(4),
        Alternating(4),
        Alternating(5),
        Quaternion8,
        Product(Box::new(Cyclic(2)), Box::new(Cyclic(2))),
        Product(Box::new(Cyclic(2)), Box::new(Cyclic(3))),
        Product(Box::new(Cyclic(3)), Box::new(Cyclic(3))),
    ]);
    specs
}

/// The default catalog, built.
pub fn default_catalog() -> Vec<(String, FiniteGroup)> {
    default_catalog_specifiers()
        .into_iter()
        .map(|s| {
            let g = s
                .build()
                .expect("catalog groups are within the default cap");
            (s.to_string(), g)
        })
        .collect()
}
