//! Fixed-capacity bitsets over element indices.

use std::fmt;

use crate::group::Element;

const WORD: usize = 64;

/// A subset of `0..capacity`, one bit per element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    capacity: usize,
}

impl ElementSet {
    pub fn new(capacity: usize) -> Self {
        ElementSet {
            words: vec![0; capacity.div_ceil(WORD)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::new(capacity);
        for i in 0..capacity {
            set.insert(Element::new(i));
        }
        set
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(capacity: usize, elements: I) -> Self {
        let mut set = Self::new(capacity);
        for e in elements {
            set.insert(e);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        let i = e.index();
        i < self.capacity && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    /// Inserts `e`, returning `true` if it was absent.
    #[inline]
    pub fn insert(&mut self, e: Element) -> bool {
        let i = e.index();
        assert!(
            i < self.capacity,
            "element {i} out of range {}",
            self.capacity
        );
        let mask = 1 << (i % WORD);
        let word = &mut self.words[i / WORD];
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.capacity, other.capacity);
        ElementSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Element::new(w * WORD + tz))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|e| e.index()))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_iterate_across_word_boundary() {
        let mut s = ElementSet::new(130);
        for i in [0, 63, 64, 129] {
            assert!(s.insert(Element::new(i)));
        }
        assert!(!s.insert(Element::new(64)));
        assert_eq!(s.len(), 4);
        let got: Vec<usize> = s.iter().map(|e| e.index()).collect();
        assert_eq!(got, vec![0, 63, 64, 129]);
        assert!(!s.contains(Element::new(1)));
        assert!(!s.contains(Element::new(500)));
    }

    #[test]
    fn subset_and_intersection() {
        let a = ElementSet::from_elements(10, [1, 2, 3].map(Element::new));
        let b = ElementSet::from_elements(10, [2, 3].map(Element::new));
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(ElementSet::full(10).len(), 10);
    }
}
