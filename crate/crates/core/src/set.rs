//! Element subsets of a finite ring, stored as bit masks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of the elements of a ring of fixed order.
///
/// Ideals, radicals, commutants and similar sets are all `ElementSet`s.
/// Two sets are only comparable when they belong to rings of the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    order: usize,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet { words: vec![0; order.div_ceil(64)], order }
    }

    pub fn full(order: usize) -> Self {
        let mut set = Self::empty(order);
        for i in 0..order {
            set.insert(i);
        }
        set
    }

    pub fn singleton(order: usize, element: usize) -> Self {
        let mut set = Self::empty(order);
        set.insert(element);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Self {
        let mut set = Self::empty(order);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self::from_indices(mask.len(), mask.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    /// Order of the ring this set lives in.
    pub fn ring_order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element < self.order && self.words[element / 64] >> (element % 64) & 1 == 1
    }

    /// Inserts `element`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, element: usize) -> bool {
        assert!(element < self.order, "element {element} out of range for order {}", self.order);
        let word = &mut self.words[element / 64];
        let bit = 1u64 << (element % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn remove(&mut self, element: usize) {
        if element < self.order {
            self.words[element / 64] &= !(1u64 << (element % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Least element, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = self.zip_with(self, |a, _| !a);
        out.clear_tail();
        out
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_order(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_order(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_order(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_order(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Membership flags, index by index.
    pub fn mask(&self) -> Vec<bool> {
        (0..self.order).map(|i| self.contains(i)).collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_order(other);
        ElementSet {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
            order: self.order,
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.order % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "element sets from rings of different order");
    }
}

/// Sets sort by cardinality first, then by their membership masks read from
/// index 0 upward with absent before present.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                for i in 0..self.order {
                    match (self.contains(i), other.contains(i)) {
                        (false, true) => return Ordering::Less,
                        (true, false) => return Ordering::Greater,
                        _ => {}
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
