//! Conjugacy classes, centralizers and the class equation, plus the
//! power-conjugacy predicates (rationality and friends).

use num_integer::Integer;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::group::{Element, FiniteGroup};
use crate::landau::{unit_fraction_sum, Fraction};

/// One orbit of the conjugation action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    members: Vec<Element>,
    representative: Element,
    element_order: usize,
}

impl ConjugacyClass {
    /// Sorted ascending.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    /// The least member.
    pub fn representative(&self) -> Element {
        self.representative
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Common order of all members.
    pub fn element_order(&self) -> usize {
        self.element_order
    }
}

/// The partition of a group into conjugacy classes, in canonical order:
/// by size, then representative order, then representative index. The
/// identity class is always first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecomposition {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl ClassDecomposition {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// k(G).
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x.index()]
    }

    pub fn class(&self, index: usize) -> &ConjugacyClass {
        &self.classes[index]
    }
}

pub fn decompose(group: &FiniteGroup) -> ClassDecomposition {
    let n = group.order();
    let mut seen = ElementSet::new(n);
    let mut classes = Vec::new();
    for x in group.elements() {
        if seen.contains(x) {
            continue;
        }
        let mut orbit = ElementSet::new(n);
        for g in group.elements() {
            orbit.insert(group.conjugate(x, g));
        }
        seen.union_with(&orbit);
        let members = orbit.to_vec();
        classes.push(ConjugacyClass {
            representative: members[0],
            element_order: group.element_order(x),
            members,
        });
    }
    classes.sort_by_key(|c| (c.size(), c.element_order, c.representative));

    let mut class_of = vec![0; n];
    for (ci, c) in classes.iter().enumerate() {
        for &x in &c.members {
            class_of[x.index()] = ci;
        }
    }
    ClassDecomposition { classes, class_of }
}

/// `C_G(x) = {g : gx = xg}`.
pub fn centralizer(group: &FiniteGroup, x: Element) -> ElementSet {
    ElementSet::from_elements(
        group.order(),
        group
            .elements()
            .filter(|&g| group.mul(g, x) == group.mul(x, g)),
    )
}

/// Class sizes with the matching indices `m_i = |G| / |C_i|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEquation {
    sizes: Vec<usize>,
    indices: Vec<usize>,
}

impl ClassEquation {
    /// Descending.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `|G| / size` for each entry of [`ClassEquation::sizes`].
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `Σ 1/m_i`, which is always exactly 1.
    pub fn reciprocal_sum(&self) -> Fraction {
        let ms: Vec<u128> = self.indices.iter().map(|&m| m as u128).collect();
        unit_fraction_sum(&ms).expect("class indices are bounded by the group order")
    }
}

pub fn class_equation(group: &FiniteGroup) -> ClassEquation {
    class_equation_of(group, &decompose(group))
}

pub fn class_equation_of(group: &FiniteGroup, dec: &ClassDecomposition) -> ClassEquation {
    let n = group.order();
    let mut sizes: Vec<usize> = dec.classes().iter().map(ConjugacyClass::size).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(
        sizes.iter().sum::<usize>(),
        n,
        "classes must partition the group"
    );
    let indices = sizes
        .iter()
        .map(|&s| {
            assert_eq!(n % s, 0, "class size {s} does not divide {n}");
            n / s
        })
        .collect();
    let eq = ClassEquation { sizes, indices };
    assert_eq!(
        eq.reciprocal_sum(),
        Fraction::ONE,
        "class equation identity failed"
    );
    eq
}

/// Every `x` is conjugate to `x^m` for all `m` coprime to `|x|`.
pub fn is_rational(group: &FiniteGroup, dec: &ClassDecomposition) -> bool {
    group.elements().all(|x| {
        let o = group.element_order(x);
        let cx = dec.class_of(x);
        (1..o)
            .filter(|m| m.gcd(&o) == 1)
            .all(|m| dec.class_of(group.pow(x, m as u64)) == cx)
    })
}

/// Every non-identity `x` is conjugate to each of its non-identity powers.
pub fn conjugate_to_all_nontrivial_powers(group: &FiniteGroup, dec: &ClassDecomposition) -> bool {
    group.elements().filter(|x| !x.is_identity()).all(|x| {
        let cx = dec.class_of(x);
        let mut y = group.mul(x, x);
        while !y.is_identity() {
            if dec.class_of(y) != cx {
                return false;
            }
            y = group.mul(y, x);
        }
        true
    })
}

pub fn all_elements_prime_order(group: &FiniteGroup) -> bool {
    group
        .elements()
        .filter(|x| !x.is_identity())
        .all(|x| is_prime(group.element_order(x) as u64))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}
