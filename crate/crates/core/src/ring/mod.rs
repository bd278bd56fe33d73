//! Finite unital rings given by complete operation tables.
//!
//! Elements are positional indices `0..order`. Every constructor documents the
//! encoding it uses so that element indices are reproducible:
//!
//! * products: mixed radix over the factor orders, last factor fastest;
//! * matrix rings: entries row-major in base `|R|`, entry (1,1) most significant;
//! * upper triangular rings: the `k(k+1)/2` stored entries row-major, same radix rule;
//! * constant-diagonal triangular rings: the diagonal value, then the strictly upper
//!   entries row-major;
//! * Dorroh extensions: `(r, v)` at index `r * |V| + v`;
//! * quotients: cosets ordered by their least member.

mod axioms;
mod build;
mod dorroh;
mod io;

pub use axioms::{verify_axioms, Violation};
pub use build::{
    build_constant_diagonal_triangular, build_matrix_ring, build_product, build_quotient,
    build_upper_triangular, build_zmod, Quotient,
};
pub use dorroh::{build_dorroh, DorrohData};
pub use io::RingFile;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default bound on the order of constructed rings.
pub const DEFAULT_SIZE_CAP: usize = 4096;
/// Default bound on the number of right ideals enumerated for one ring.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;
/// Environment variable that overrides [`DEFAULT_SIZE_CAP`].
pub const SIZE_CAP_ENV: &str = "RINGLAB_SIZE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub size_cap: usize,
    pub lattice_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { size_cap: DEFAULT_SIZE_CAP, lattice_cap: DEFAULT_LATTICE_CAP }
    }
}

impl Limits {
    /// Defaults, with the size cap taken from `RINGLAB_SIZE_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(SIZE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.size_cap = cap;
        }
        limits
    }

    pub(crate) fn check_order(&self, order: u128) -> Result<usize> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > self.size_cap as u128 {
            return Err(Error::SizeCap { order, cap: self.size_cap });
        }
        Ok(order as usize)
    }
}

/// A finite ring with identity, stored as flat `order × order` tables.
///
/// Values are immutable once built. Construction through [`FiniteRing::from_tables`]
/// only checks table shape; use [`verify_axioms`] (or [`FiniteRing::new_checked`])
/// before trusting a ring from outside the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    labels: Option<Vec<String>>,
}

impl FiniteRing {
    /// Builds a ring from nested tables, checking shape and index ranges only.
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let order = add.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > u32::MAX as usize {
            return Err(Error::Malformed(format!("order {order} too large")));
        }
        let flatten = |table: &[Vec<usize>], what: &str| -> Result<Vec<u32>> {
            if table.len() != order {
                return Err(Error::Malformed(format!("{what} table has {} rows, expected {order}", table.len())));
            }
            let mut flat = Vec::with_capacity(order * order);
            for (i, row) in table.iter().enumerate() {
                if row.len() != order {
                    return Err(Error::Malformed(format!("{what} row {i} has {} entries, expected {order}", row.len())));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= order {
                        return Err(Error::Malformed(format!("{what}[{i}][{j}] = {v} is not an element index")));
                    }
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let add = flatten(add, "add")?;
        let mul = flatten(mul, "mul")?;
        if zero >= order || one >= order {
            return Err(Error::Malformed(format!("zero {zero} / one {one} outside 0..{order}")));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::Malformed(format!("{} labels for {order} elements", l.len())));
            }
        }
        Ok(Self::assemble(name.into(), order, add, mul, zero, one, labels))
    }

    /// [`FiniteRing::from_tables`] followed by [`verify_axioms`].
    pub fn new_checked(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let ring = Self::from_tables(name, add, mul, zero, one, labels)?;
        let violations = verify_axioms(&ring);
        if violations.is_empty() {
            Ok(ring)
        } else {
            Err(Error::Axioms(violations))
        }
    }

    /// Tables generated from closures; used by the constructors in this module.
    pub(crate) fn from_fn(
        name: String,
        order: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                add_t.push(add(i, j) as u32);
                mul_t.push(mul(i, j) as u32);
            }
        }
        Self::assemble(name, order, add_t, mul_t, zero, one, labels)
    }

    fn assemble(
        name: String,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Self {
        // u32::MAX marks a missing additive inverse; verify_axioms reports it.
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] as usize == zero)
                    .map_or(u32::MAX, |b| b as u32)
            })
            .collect();
        FiniteRing { name, order, add, mul, neg, zero, one, labels }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, element: usize) -> String {
        match &self.labels {
            Some(l) => l[element].clone(),
            None => element.to_string(),
        }
    }

    /// The zero ring, where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let n = self.neg[a];
        assert!(n != u32::MAX, "element {a} has no additive inverse");
        n as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, exp: usize) -> usize {
        (0..exp).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// `k · a` (k-fold sum).
    pub fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element, order: self.order })
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Two-sided inverse of every element, where one exists.
    pub fn inverses(&self) -> Vec<Option<usize>> {
        self.elements()
            .map(|a| {
                self.elements()
                    .find(|&b| self.mul(a, b) == self.one)
                    .filter(|&b| self.mul(b, a) == self.one)
            })
            .collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut power = a;
        for _ in 0..self.order {
            if power == self.zero {
                return true;
            }
            power = self.mul(power, a);
        }
        power == self.zero
    }

    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_idempotent(a)))
    }

    pub fn nilpotents(&self) -> ElementSet {
        ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_nilpotent(a)))
    }

    pub fn units(&self) -> ElementSet {
        let inv = self.inverses();
        ElementSet::from_indices(self.order, self.elements().filter(|&a| inv[a].is_some()))
    }

    /// Raw tables as nested vectors, for serialization.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.nested(&self.add)
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.nested(&self.mul)
    }

    fn nested(&self, flat: &[u32]) -> Vec<Vec<usize>> {
        flat.chunks(self.order).map(|row| row.iter().map(|&v| v as usize).collect()).collect()
    }
}

/// Units, idempotents and nilpotent elements of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSets {
    pub units: ElementSet,
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
}

pub fn element_sets(ring: &FiniteRing) -> ElementSets {
    ElementSets { units: ring.units(), idempotents: ring.idempotents(), nilpotents: ring.nilpotents() }
}

/// Recognizes ℤ₂: a unital ring of order 2 with `0 ≠ 1` admits no other tables.
pub fn is_zmod2(ring: &FiniteRing) -> bool {
    ring.order() == 2 && ring.zero() != ring.one()
}

/// Mixed-radix encoding, first digit most significant.
pub fn encode_mixed(digits: &[usize], radices: &[usize]) -> usize {
    debug_assert_eq!(digits.len(), radices.len());
    digits.iter().zip(radices).fold(0, |acc, (&d, &r)| {
        debug_assert!(d < r);
        acc * r + d
    })
}

/// Inverse of [`encode_mixed`].
pub fn decode_mixed(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; radices.len()];
    for (slot, &r) in digits.iter_mut().zip(radices).rev() {
        *slot = index % r;
        index /= r;
    }
    digits
}
