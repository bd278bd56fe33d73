//! Right ideals, two-sided ideals and the ideal-theoretic predicates that the
//! radical computations are built from.
//!
//! Right ideals are enumerated as the closure of the principal right ideals
//! under pairwise sums, never by subset enumeration.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits};
use crate::set::ElementSet;

/// `base + ⟨extra⟩`, where `base` must be an additive subgroup.
pub fn subgroup_sum(ring: &FiniteRing, base: &ElementSet, extra: &ElementSet) -> ElementSet {
    let mut sum = base.clone();
    let mut members = sum.to_vec();
    for g in extra.iter() {
        adjoin(ring, &mut sum, &mut members, g);
    }
    sum
}

/// `sum := sum + ⟨g⟩`; returns whether anything was added.
fn adjoin(ring: &FiniteRing, sum: &mut ElementSet, members: &mut Vec<usize>, g: usize) -> bool {
    if sum.contains(g) {
        return false;
    }
    let old = sum.clone();
    let coset_reps = members.len();
    let mut multiple = g;
    while !old.contains(multiple) {
        for i in 0..coset_reps {
            let y = ring.add(members[i], multiple);
            if sum.insert(y) {
                members.push(y);
            }
        }
        multiple = ring.add(multiple, g);
    }
    true
}

/// Which one-sided multiplications an ideal closure respects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sides {
    Right,
    Both,
}

fn closure(ring: &FiniteRing, gens: impl IntoIterator<Item = usize>, sides: Sides) -> ElementSet {
    let mut sum = ElementSet::singleton(ring.order(), ring.zero());
    let mut members = vec![ring.zero()];
    let mut work: Vec<usize> = gens.into_iter().collect();
    while let Some(x) = work.pop() {
        if adjoin(ring, &mut sum, &mut members, x) {
            for r in ring.elements() {
                work.push(ring.mul(x, r));
                if sides == Sides::Both {
                    work.push(ring.mul(r, x));
                }
            }
        }
    }
    sum
}

/// `aR = {a·r : r ∈ R}`.
pub fn principal_right_ideal(ring: &FiniteRing, a: usize) -> ElementSet {
    ElementSet::from_indices(ring.order(), ring.elements().map(|r| ring.mul(a, r)))
}

/// Smallest right ideal containing `gens`, by worklist fixpoint.
pub fn right_ideal_closure(ring: &FiniteRing, gens: &ElementSet) -> ElementSet {
    closure(ring, gens.iter(), Sides::Right)
}

/// Smallest two-sided ideal containing `gens`.
pub fn two_sided_closure(ring: &FiniteRing, gens: &ElementSet) -> ElementSet {
    closure(ring, gens.iter(), Sides::Both)
}

fn is_additive_subgroup(ring: &FiniteRing, set: &ElementSet) -> bool {
    set.contains(ring.zero()) && set.iter().all(|a| set.iter().all(|b| set.contains(ring.add(a, b))))
}

pub fn is_right_ideal(ring: &FiniteRing, set: &ElementSet) -> bool {
    set.ring_order() == ring.order()
        && is_additive_subgroup(ring, set)
        && set.iter().all(|a| ring.elements().all(|r| set.contains(ring.mul(a, r))))
}

pub fn is_two_sided_ideal(ring: &FiniteRing, set: &ElementSet) -> bool {
    is_right_ideal(ring, set) && set.iter().all(|a| ring.elements().all(|r| set.contains(ring.mul(r, a))))
}

fn require_right_ideal(ring: &FiniteRing, set: &ElementSet) -> Result<()> {
    if is_right_ideal(ring, set) {
        Ok(())
    } else {
        Err(Error::NotRightIdeal(format!("{set:?}")))
    }
}

/// Closure of `seeds ∪ {0}` under pairwise sums, sorted by (cardinality, mask).
fn sum_closure(ring: &FiniteRing, seeds: &[ElementSet], limits: &Limits) -> Result<Vec<ElementSet>> {
    let zero = ElementSet::singleton(ring.order(), ring.zero());
    let mut index: HashMap<ElementSet, ()> = HashMap::new();
    let mut all: Vec<ElementSet> = Vec::new();
    for s in std::iter::once(&zero).chain(seeds) {
        if index.insert(s.clone(), ()).is_none() {
            all.push(s.clone());
        }
    }
    let generators: Vec<ElementSet> = all.clone();
    let mut next = 0;
    while next < all.len() {
        let current = all[next].clone();
        next += 1;
        for g in &generators {
            if g.is_subset(&current) {
                continue;
            }
            let sum = subgroup_sum(ring, &current, g);
            if !index.contains_key(&sum) {
                index.insert(sum.clone(), ());
                all.push(sum);
                if all.len() > limits.lattice_cap {
                    return Err(Error::LatticeCap { cap: limits.lattice_cap });
                }
            }
        }
    }
    all.sort();
    Ok(all)
}

fn distinct_principals(ring: &FiniteRing) -> Vec<ElementSet> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for a in ring.elements() {
        let p = principal_right_ideal(ring, a);
        if seen.insert(p.clone(), ()).is_none() {
            out.push(p);
        }
    }
    out
}

/// Every right ideal of `ring`, sorted by (cardinality, mask).
pub fn all_right_ideals(ring: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>> {
    sum_closure(ring, &distinct_principals(ring), limits)
}

/// Every two-sided ideal, as sums of the principal ideals `RaR`.
pub fn two_sided_ideals(ring: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>> {
    let mut seen = HashMap::new();
    let mut principals = Vec::new();
    for a in ring.elements() {
        let p = closure(ring, [a], Sides::Both);
        if seen.insert(p.clone(), ()).is_none() {
            principals.push(p);
        }
    }
    sum_closure(ring, &principals, limits)
}

/// `I` meets every nonzero principal right ideal nontrivially.
pub fn is_essential(ring: &FiniteRing, ideal: &ElementSet) -> Result<bool> {
    require_right_ideal(ring, ideal)?;
    Ok(ring
        .elements()
        .filter(|&x| x != ring.zero())
        .all(|x| principal_right_ideal(ring, x).intersection_len(ideal) > 1))
}

pub fn maximal_right_ideals(ring: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>> {
    let lattice = RightIdealLattice::new(ring, limits)?;
    Ok(lattice.maximal.iter().map(|&i| lattice.ideals[i].clone()).collect())
}

pub fn socle(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    Ok(RightIdealLattice::new(ring, limits)?.socle)
}

/// Least idempotent `e` with `eR = I`, if `I` is a direct summand of `R_R`.
pub fn is_direct_summand(ring: &FiniteRing, ideal: &ElementSet) -> Result<Option<usize>> {
    require_right_ideal(ring, ideal)?;
    Ok(ring
        .elements()
        .filter(|&e| ring.is_idempotent(e))
        .find(|&e| principal_right_ideal(ring, e) == *ideal))
}

/// `I + K = R` with `K` essential forces `K = R`.
///
/// `R/K` is cyclic, and a cyclic module `R/K` is singular exactly when `K` is
/// essential, so only essential `K` are examined.
pub fn is_delta_small(ring: &FiniteRing, ideal: &ElementSet, limits: &Limits) -> Result<bool> {
    require_right_ideal(ring, ideal)?;
    let lattice = RightIdealLattice::new(ring, limits)?;
    Ok(lattice.is_delta_small(ideal))
}

/// The largest two-sided ideal inside the right ideal `M`: `{a : Ra ⊆ M}`,
/// which is the annihilator of `R/M`.
pub fn ideal_core(ring: &FiniteRing, m: &ElementSet) -> Result<ElementSet> {
    require_right_ideal(ring, m)?;
    let core = ElementSet::from_indices(
        ring.order(),
        ring.elements().filter(|&a| ring.elements().all(|r| m.contains(ring.mul(r, a)))),
    );
    if !core.is_subset(m) || !is_two_sided_ideal(ring, &core) {
        return Err(Error::Fault(format!("core of {m:?} is not a two-sided ideal inside it")));
    }
    Ok(core)
}

/// `|I + K|` for additive subgroups, via `|I|·|K| / |I ∩ K|`.
pub(crate) fn sum_len(a: &ElementSet, b: &ElementSet) -> usize {
    a.len() * b.len() / a.intersection_len(b)
}

/// The right ideal lattice of one ring with the derived data the radical
/// computations need.
#[derive(Debug, Clone)]
pub struct RightIdealLattice {
    order: usize,
    /// All right ideals, sorted by (cardinality, mask).
    pub ideals: Vec<ElementSet>,
    /// `principal_of[a]` indexes `aR` in `ideals`.
    pub principal_of: Vec<usize>,
    pub essential: Vec<bool>,
    /// Indices of the maximal proper right ideals.
    pub maximal: Vec<usize>,
    /// Indices of the minimal nonzero right ideals.
    pub minimal: Vec<usize>,
    /// Least idempotent generator of each ideal that is a direct summand.
    pub summand: Vec<Option<usize>>,
    pub socle: ElementSet,
}

impl RightIdealLattice {
    pub fn new(ring: &FiniteRing, limits: &Limits) -> Result<Self> {
        let n = ring.order();
        let principals: Vec<ElementSet> = ring.elements().map(|a| principal_right_ideal(ring, a)).collect();
        let mut distinct = Vec::new();
        let mut seen = HashMap::new();
        for p in &principals {
            if seen.insert(p.clone(), ()).is_none() {
                distinct.push(p.clone());
            }
        }
        let ideals = sum_closure(ring, &distinct, limits)?;
        let position: HashMap<&ElementSet, usize> = ideals.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let principal_of: Vec<usize> = principals.iter().map(|p| position[p]).collect();

        let nonzero_principals: Vec<&ElementSet> = distinct.iter().filter(|p| p.len() > 1).collect();
        let essential = ideals
            .iter()
            .map(|i| nonzero_principals.iter().all(|p| p.intersection_len(i) > 1))
            .collect();

        let proper: Vec<usize> = (0..ideals.len()).filter(|&i| ideals[i].len() < n).collect();
        let maximal = proper
            .iter()
            .copied()
            .filter(|&i| !proper.iter().any(|&j| j != i && ideals[i].is_subset(&ideals[j])))
            .collect();
        let nonzero: Vec<usize> = (0..ideals.len()).filter(|&i| ideals[i].len() > 1).collect();
        let minimal: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&i| !nonzero.iter().any(|&j| j != i && ideals[j].is_subset(&ideals[i])))
            .collect();

        let mut summand = vec![None; ideals.len()];
        for e in ring.elements().filter(|&e| ring.is_idempotent(e)) {
            summand[principal_of[e]].get_or_insert(e);
        }

        let zero = ElementSet::singleton(n, ring.zero());
        let socle = minimal.iter().fold(zero, |acc, &i| subgroup_sum(ring, &acc, &ideals[i]));

        Ok(RightIdealLattice { order: n, ideals, principal_of, essential, maximal, minimal, summand, socle })
    }

    pub fn ring_order(&self) -> usize {
        self.order
    }

    pub fn index_of(&self, ideal: &ElementSet) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }

    /// `a + b = R` for two members of the lattice.
    pub fn sums_to_ring(&self, a: &ElementSet, b: &ElementSet) -> bool {
        sum_len(a, b) == self.order
    }

    pub fn is_delta_small(&self, ideal: &ElementSet) -> bool {
        self.ideals
            .iter()
            .zip(&self.essential)
            .filter(|(k, &ess)| ess && k.len() < self.order)
            .all(|(k, _)| !self.sums_to_ring(ideal, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_matrix_ring, build_upper_triangular, build_zmod};

    fn limits() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> FiniteRing {
        build_zmod(n, &limits()).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    fn t2z2() -> FiniteRing {
        build_upper_triangular(&z(2), 2, &limits()).unwrap()
    }

    #[test]
    fn principal_ideals() {
        let z4 = z(4);
        assert_eq!(principal_right_ideal(&z4, 2).to_vec(), vec![0, 2]);
        assert_eq!(principal_right_ideal(&z4, 0).to_vec(), vec![0]);
        assert!(principal_right_ideal(&z4, 1).is_full());
    }

    #[test]
    fn closures() {
        let z6 = z(6);
        assert_eq!(right_ideal_closure(&z6, &ElementSet::empty(6)).to_vec(), vec![0]);
        assert!(right_ideal_closure(&z6, &set(6, &[1])).is_full());
        assert!(right_ideal_closure(&z6, &set(6, &[2, 3])).is_full());
        assert_eq!(right_ideal_closure(&z6, &set(6, &[4])).to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn right_ideal_lists() {
        let z4 = z(4);
        let ideals = all_right_ideals(&z4, &limits()).unwrap();
        assert_eq!(ideals, vec![set(4, &[0]), set(4, &[0, 2]), ElementSet::full(4)]);
        assert_eq!(all_right_ideals(&z(2), &limits()).unwrap(), vec![set(2, &[0]), ElementSet::full(2)]);

        let t = t2z2();
        let ideals = all_right_ideals(&t, &limits()).unwrap();
        assert!(ideals.contains(&set(8, &[0])));
        assert!(ideals.contains(&ElementSet::full(8)));
        // entries (a11, a12, a22) with a11 = 0
        assert!(ideals.contains(&set(8, &[0, 1, 2, 3])));
        for i in &ideals {
            assert!(is_right_ideal(&t, i));
        }
    }

    #[test]
    fn two_sided_lists() {
        for n in [4, 6, 8, 9] {
            let r = z(n);
            assert_eq!(two_sided_ideals(&r, &limits()).unwrap(), all_right_ideals(&r, &limits()).unwrap());
        }
        let m = build_matrix_ring(&z(2), 2, &limits()).unwrap();
        assert_eq!(two_sided_ideals(&m, &limits()).unwrap(), vec![set(16, &[0]), ElementSet::full(16)]);
        assert!(two_sided_ideals(&t2z2(), &limits()).unwrap().len() > 2);
    }

    #[test]
    fn essential_ideals() {
        assert!(is_essential(&z(4), &set(4, &[0, 2])).unwrap());
        assert!(is_essential(&z(6), &ElementSet::full(6)).unwrap());
        assert!(!is_essential(&z(6), &set(6, &[0, 3])).unwrap());
        assert!(matches!(is_essential(&z(4), &set(4, &[0, 1])), Err(Error::NotRightIdeal(_))));
    }

    #[test]
    fn maximal_ideals() {
        assert_eq!(maximal_right_ideals(&z(4), &limits()).unwrap(), vec![set(4, &[0, 2])]);
        let mut m6 = maximal_right_ideals(&z(6), &limits()).unwrap();
        m6.sort_by_key(|s| s.to_vec());
        assert_eq!(m6, vec![set(6, &[0, 2, 4]), set(6, &[0, 3])]);
        assert_eq!(maximal_right_ideals(&z(2), &limits()).unwrap(), vec![set(2, &[0])]);
        assert!(maximal_right_ideals(&z(1), &limits()).unwrap().is_empty());
    }

    #[test]
    fn socles() {
        assert_eq!(socle(&z(4), &limits()).unwrap().to_vec(), vec![0, 2]);
        assert!(socle(&z(6), &limits()).unwrap().is_full());
        assert!(socle(&z(2), &limits()).unwrap().is_full());
        assert_eq!(socle(&z(1), &limits()).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn direct_summands() {
        let z4 = z(4);
        assert_eq!(is_direct_summand(&z4, &ElementSet::full(4)).unwrap(), Some(1));
        assert_eq!(is_direct_summand(&z4, &set(4, &[0])).unwrap(), Some(0));
        assert_eq!(is_direct_summand(&z4, &set(4, &[0, 2])).unwrap(), None);
        assert_eq!(is_direct_summand(&z(6), &set(6, &[0, 3])).unwrap(), Some(3));
    }

    #[test]
    fn delta_small_ideals() {
        assert!(is_delta_small(&z(4), &set(4, &[0]), &limits()).unwrap());
        assert!(is_delta_small(&z(4), &set(4, &[0, 2]), &limits()).unwrap());
        // the only essential right ideal of Z6 is Z6 itself
        assert!(is_delta_small(&z(6), &set(6, &[0, 3]), &limits()).unwrap());
        assert!(!is_delta_small(&z(4), &ElementSet::full(4), &limits()).unwrap());
    }

    #[test]
    fn cores() {
        let z6 = z(6);
        assert_eq!(ideal_core(&z6, &set(6, &[0, 3])).unwrap(), set(6, &[0, 3]));
        assert!(ideal_core(&z6, &ElementSet::full(6)).unwrap().is_full());

        let t = t2z2();
        // {a22 = 0} = E11·T is already two-sided
        let first_row = set(8, &[0, 2, 4, 6]);
        assert!(is_right_ideal(&t, &first_row));
        assert_eq!(ideal_core(&t, &first_row).unwrap(), first_row);
        // (E12 + E22)·T = {0, [0 1; 0 1]} has zero core
        let m = principal_right_ideal(&t, 0b011);
        assert_eq!(m.to_vec(), vec![0, 3]);
        assert_eq!(ideal_core(&t, &m).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn sum_of_subgroups_matches_closure() {
        let z12 = z(12);
        let a = set(12, &[0, 4, 8]);
        let b = set(12, &[0, 6]);
        assert_eq!(subgroup_sum(&z12, &a, &b).to_vec(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(sum_len(&a, &b), 6);
    }
}
