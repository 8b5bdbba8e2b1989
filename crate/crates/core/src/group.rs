//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..n` with the identity always at index 0.
//! Groups can be built from a raw Cayley table (fully validated, including an
//! exhaustive associativity check) or as the closure of a set of permutation
//! generators (valid by construction).

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

/// Default upper bound on the number of elements any construction may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// An element of a [`FiniteGroup`], identified by its index in the table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        Element(u32::try_from(index).expect("element index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite group given by its Cayley table. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` table, `table[i * order + j] = i ∘ j`.
    table: Vec<u32>,
    inverse: Vec<u32>,
    name: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a raw Cayley table and builds the group.
    ///
    /// If the identity is not element 0 the table is relabelled by swapping
    /// the identity with 0. Fails with [`GroupError::NotAGroup`] naming the
    /// first offending cell or triple.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(GroupError::NotAGroup("table too large".into()));
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::NotAGroup(format!(
                    "entry ({i}, {j}) = {v} is out of range 0..{n}"
                )));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| raw[e][j] == j && raw[j][e] == j))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;

        // Swap labels `identity` and 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(raw[i][j]) as u32;
            }
        }

        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i * n + j] == 0 && table[j * n + i] == 0)
                .ok_or_else(|| {
                    GroupError::NotAGroup(format!("element {} has no inverse", relabel(i)))
                })?;
            inverse[i] = inv as u32;
        }

        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j] as usize;
                for l in 0..n {
                    let jl = table[j * n + l] as usize;
                    if table[ij * n + l] != table[i * n + jl] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            relabel(i),
                            relabel(j),
                            relabel(l)
                        )));
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            name: None,
        })
    }

    /// Breadth-first closure of a permutation group, indexed in discovery order.
    pub fn from_permutations(gens: &PermutationGenerators, cap: usize) -> Result<Self> {
        let degree = gens.degree();
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut perms: Vec<Vec<u32>> = vec![identity.clone()];
        // (parent, generator) such that perms[i] = perms[parent] * gens[generator].
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        index.insert(identity, 0);

        // Deduplicate generators and drop the identity so that the right
        // multiplication tables below stay small.
        let mut gen_list: Vec<&[u32]> = Vec::new();
        for g in gens.generators() {
            if g.iter().enumerate().any(|(i, &x)| x as usize != i)
                && !gen_list.contains(&g.as_slice())
            {
                gen_list.push(g);
            }
        }

        let mut head = 0;
        while head < perms.len() {
            for (gi, g) in gen_list.iter().enumerate() {
                let next = compose(&perms[head], g);
                if !index.contains_key(&next) {
                    if perms.len() >= cap {
                        return Err(GroupError::ClosureCapExceeded { cap });
                    }
                    index.insert(next.clone(), perms.len() as u32);
                    perms.push(next);
                    parent.push((head as u32, gi as u32));
                }
            }
            head += 1;
        }

        let n = perms.len();
        // right[g][i] = i * gens[g]
        let right: Vec<Vec<u32>> = gen_list
            .iter()
            .map(|g| perms.iter().map(|p| index[&compose(p, g)]).collect())
            .collect();

        // table[i][j] = table[i][parent(j)] * gen(j); columns are filled in discovery order.
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
        }
        for j in 1..n {
            let (p, g) = parent[j];
            let r = &right[g as usize];
            for i in 0..n {
                table[i * n + j] = r[table[i * n + p as usize] as usize];
            }
        }

        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let row = &table[i * n..(i + 1) * n];
            inverse[i] = row
                .iter()
                .position(|&x| x == 0)
                .expect("permutation inverse") as u32;
        }

        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            name: None,
        })
    }

    /// Builds a group from a product rule on `0..n`, validating it like a raw table.
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let raw: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| mul(i, j)).collect())
            .collect();
        Self::from_cayley_table(&raw)
    }

    /// Direct product on pairs `(g, h)` serialized as `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<Self> {
        let (a, b) = (self.order, other.order);
        let n = a
            .checked_mul(b)
            .filter(|&n| n <= cap)
            .ok_or(GroupError::ClosureCapExceeded { cap })?;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (x1, x2) = (x / b, x % b);
            for y in 0..n {
                let (y1, y2) = (y / b, y % b);
                let z1 = self.table[x1 * a + y1] as usize;
                let z2 = other.table[x2 * b + y2] as usize;
                table[x * n + y] = (z1 * b + z2) as u32;
            }
        }
        let inverse = (0..n)
            .map(|x| self.inverse[x / b] * b as u32 + other.inverse[x % b])
            .collect();
        let name = match (&self.name, &other.name) {
            (Some(l), Some(r)) => Some(format!("{l}x{r}")),
            _ => None,
        };
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            name,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order).map(Element::new)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        Element(self.inverse[a.index()])
    }

    /// `x^e` by repeated squaring.
    pub fn pow(&self, x: Element, mut e: u64) -> Element {
        let mut base = x;
        let mut acc = Element::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    /// Least `t ≥ 1` with `x^t = 1`.
    pub fn element_order(&self, x: Element) -> usize {
        let mut t = 1;
        let mut y = x;
        while !y.is_identity() {
            y = self.mul(y, x);
            t += 1;
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.table[i * n + j] == self.table[j * n + i]))
    }

    /// The table as nested rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Re-checks every table invariant exhaustively (closure, identity,
    /// inverses, associativity). Returns the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if self.table.len() != n * n || self.inverse.len() != n {
            return Err(GroupError::NotAGroup("table shape mismatch".into()));
        }
        if let Some(pos) = self.table.iter().position(|&x| x as usize >= n) {
            return Err(GroupError::NotAGroup(format!("cell {pos} out of range")));
        }
        for j in self.elements() {
            if self.mul(Element::IDENTITY, j) != j || self.mul(j, Element::IDENTITY) != j {
                return Err(GroupError::NotAGroup(format!("identity fails at {j}")));
            }
            let inv = self.inv(j);
            if !self.mul(j, inv).is_identity() || !self.mul(inv, j).is_identity() {
                return Err(GroupError::NotAGroup(format!("inverse fails at {j}")));
            }
        }
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.mul(i, j);
                for l in self.elements() {
                    if self.mul(ij, l) != self.mul(i, self.mul(j, l)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({i}, {j}, {l})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes in the plain-text Cayley format read by [`FiniteGroup::parse_cayley`].
    pub fn to_cayley_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("{}\n", self.order));
        for row in self.table.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text Cayley format: first non-comment line is `n`,
    /// followed by `n` rows of `n` whitespace-separated 0-based indices.
    /// Lines starting with `#` are comments.
    pub fn parse_cayley(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GroupError::FileParse("missing order line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| GroupError::FileParse(format!("bad order line {header:?}")))?;
        let mut raw = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            if i >= n {
                return Err(GroupError::FileParse(format!("more than {n} rows")));
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| GroupError::FileParse(format!("row {i}: bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(GroupError::FileParse(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            raw.push(row);
        }
        if raw.len() != n {
            return Err(GroupError::FileParse(format!(
                "expected {n} rows, found {}",
                raw.len()
            )));
        }
        Self::from_cayley_table(&raw)
    }
}

/// `(a * b)(x) = b(a(x))`: apply `a` first.
fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// A list of permutations of `0..degree`, each validated as a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGenerators {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

impl PermutationGenerators {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::BadParameter(
                "permutation degree must be positive".into(),
            ));
        }
        let mut out = Vec::with_capacity(generators.len());
        for (gi, g) in generators.into_iter().enumerate() {
            if g.len() != degree {
                return Err(GroupError::BadParameter(format!(
                    "generator {gi} has length {}, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in &g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::BadParameter(format!(
                        "generator {gi} is not a bijection on 0..{degree}"
                    )));
                }
            }
            out.push(g.into_iter().map(|x| x as u32).collect());
        }
        Ok(PermutationGenerators {
            degree,
            generators: out,
        })
    }

    /// Builds generators from cycle notation, one list of cycles per generator.
    pub fn from_cycles(degree: usize, generators: &[&[&[usize]]]) -> Result<Self> {
        let perms = generators
            .iter()
            .map(|cycles| {
                let mut p: Vec<usize> = (0..degree).collect();
                for cycle in cycles.iter() {
                    for (k, &x) in cycle.iter().enumerate() {
                        let y = cycle[(k + 1) % cycle.len()];
                        if x >= degree || y >= degree {
                            return Err(GroupError::BadParameter(format!(
                                "cycle point out of range 0..{degree}"
                            )));
                        }
                        p[x] = y;
                    }
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }
}
