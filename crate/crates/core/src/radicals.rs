//! The Jacobson radical, the quasinilpotent set, and δ(R) computed five
//! independent ways.
//!
//! The five routes to δ(R):
//!
//! 1. intersection of the essential maximal right ideals;
//! 2. sum of all δ-small right ideals (which must itself be δ-small);
//! 3. elements `x` such that `xR + K = R` forces `K` to be a direct summand;
//! 4. intersection of the cores of the essential maximal right ideals, i.e. of the
//!    annihilators of the singular simple modules;
//! 5. elements `x` such that every `(1 + xy)R` has a complement inside the socle.
//!
//! An empty intersection is the whole ring. Production code always goes through
//! [`delta`], which insists that all five agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{is_two_sided_ideal, subgroup_sum, sum_len, RightIdealLattice};
use crate::ring::{FiniteRing, Limits};
use crate::set::ElementSet;

/// The five δ computations for one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaComputation {
    pub r1: ElementSet,
    pub r2: ElementSet,
    pub r3: ElementSet,
    pub r4: ElementSet,
    pub r5: ElementSet,
    /// Shared value; only meaningful when `agree` holds.
    pub consensus: ElementSet,
    pub agree: bool,
}

impl DeltaComputation {
    /// Runs all five characterizations without judging the outcome.
    pub fn compute(ring: &FiniteRing, lattice: &RightIdealLattice) -> Result<Self> {
        let (r1, r2, r3, r4, r5) = join5(
            || Ok::<_, Error>(delta_r1_in(ring, lattice)),
            || delta_r2_in(ring, lattice),
            || Ok::<_, Error>(delta_r3_in(ring, lattice)),
            || delta_r4_in(ring, lattice),
            || Ok::<_, Error>(delta_r5_in(ring, lattice)),
        );
        let (r1, r2, r3, r4, r5) = (r1?, r2?, r3?, r4?, r5?);
        let agree = r1 == r2 && r2 == r3 && r3 == r4 && r4 == r5;
        Ok(DeltaComputation { consensus: r1.clone(), r1, r2, r3, r4, r5, agree })
    }

    pub fn masks(&self) -> [&ElementSet; 5] {
        [&self.r1, &self.r2, &self.r3, &self.r4, &self.r5]
    }
}

/// Five-way fork over `rayon::join`.
fn join5<A, B, C, D, E, RA, RB, RC, RD, RE>(a: A, b: B, c: C, d: D, e: E) -> (RA, RB, RC, RD, RE)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    C: FnOnce() -> RC + Send,
    D: FnOnce() -> RD + Send,
    E: FnOnce() -> RE + Send,
    RA: Send,
    RB: Send,
    RC: Send,
    RD: Send,
    RE: Send,
{
    let ((ra, rb), ((rc, rd), re)) = rayon::join(|| rayon::join(a, b), || rayon::join(|| rayon::join(c, d), e));
    (ra, rb, rc, rd, re)
}

fn intersect_all<'a>(order: usize, sets: impl Iterator<Item = &'a ElementSet>) -> ElementSet {
    sets.fold(ElementSet::full(order), |acc, s| acc.intersection(s))
}

fn essential_maximal(lattice: &RightIdealLattice) -> impl Iterator<Item = &ElementSet> {
    lattice.maximal.iter().filter(|&&i| lattice.essential[i]).map(|&i| &lattice.ideals[i])
}

fn delta_r1_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> ElementSet {
    intersect_all(ring.order(), essential_maximal(lattice))
}

fn delta_r2_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> Result<ElementSet> {
    let zero = ElementSet::singleton(ring.order(), ring.zero());
    let sum = lattice
        .ideals
        .iter()
        .filter(|i| lattice.is_delta_small(i))
        .fold(zero, |acc, i| subgroup_sum(ring, &acc, i));
    if !lattice.is_delta_small(&sum) {
        return Err(Error::Fault(format!("sum of delta-small right ideals {sum:?} is not delta-small")));
    }
    Ok(sum)
}

fn delta_r3_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> ElementSet {
    // whether xR + K = R forces K to be a summand, per distinct xR
    let mut verdict: Vec<Option<bool>> = vec![None; lattice.ideals.len()];
    let mut ok = |p: usize| {
        *verdict[p].get_or_insert_with(|| {
            let principal = &lattice.ideals[p];
            lattice
                .ideals
                .iter()
                .zip(&lattice.summand)
                .all(|(k, summand)| summand.is_some() || !lattice.sums_to_ring(principal, k))
        })
    };
    ElementSet::from_indices(ring.order(), ring.elements().filter(|&x| ok(lattice.principal_of[x])))
}

fn delta_r4_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> Result<ElementSet> {
    let mut acc = ElementSet::full(ring.order());
    for m in essential_maximal(lattice) {
        acc.intersect_with(&crate::ideals::ideal_core(ring, m)?);
    }
    Ok(acc)
}

fn delta_r5_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> ElementSet {
    let n = ring.order();
    let semisimple: Vec<&ElementSet> = lattice.ideals.iter().filter(|y| y.is_subset(&lattice.socle)).collect();
    let mut complemented: Vec<Option<bool>> = vec![None; lattice.ideals.len()];
    let mut has_complement = |p: usize| {
        *complemented[p].get_or_insert_with(|| {
            let principal = &lattice.ideals[p];
            semisimple.iter().any(|y| principal.intersection_len(y) == 1 && sum_len(principal, y) == n)
        })
    };
    let one = ring.one();
    ElementSet::from_indices(
        n,
        ring.elements()
            .filter(|&x| ring.elements().all(|y| has_complement(lattice.principal_of[ring.add(one, ring.mul(x, y))]))),
    )
}

pub fn delta_r1(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    Ok(delta_r1_in(ring, &RightIdealLattice::new(ring, limits)?))
}

pub fn delta_r2(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    delta_r2_in(ring, &RightIdealLattice::new(ring, limits)?)
}

pub fn delta_r3(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    Ok(delta_r3_in(ring, &RightIdealLattice::new(ring, limits)?))
}

pub fn delta_r4(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    delta_r4_in(ring, &RightIdealLattice::new(ring, limits)?)
}

pub fn delta_r5(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    Ok(delta_r5_in(ring, &RightIdealLattice::new(ring, limits)?))
}

/// δ(R) by consensus of all five characterizations.
pub fn delta(ring: &FiniteRing, limits: &Limits) -> Result<DeltaComputation> {
    let lattice = RightIdealLattice::new(ring, limits)?;
    let jacobson = jacobson_in(ring, &lattice)?;
    delta_in(ring, &lattice, &jacobson)
}

pub(crate) fn delta_in(ring: &FiniteRing, lattice: &RightIdealLattice, jacobson: &ElementSet) -> Result<DeltaComputation> {
    let computation = DeltaComputation::compute(ring, lattice)?;
    if !computation.agree {
        return Err(Error::DeltaDisagreement(Box::new(computation)));
    }
    if !is_two_sided_ideal(ring, &computation.consensus) {
        return Err(Error::Fault("delta is not a two-sided ideal".into()));
    }
    if !jacobson.is_subset(&computation.consensus) {
        return Err(Error::Fault("J(R) is not contained in delta".into()));
    }
    Ok(computation)
}

/// `{x : 1 − xy is a unit for every y}`.
pub fn jacobson_by_units(ring: &FiniteRing) -> ElementSet {
    let inverses = ring.inverses();
    let one = ring.one();
    ElementSet::from_indices(
        ring.order(),
        ring.elements().filter(|&x| ring.elements().all(|y| inverses[ring.sub(one, ring.mul(x, y))].is_some())),
    )
}

/// J(R), computed as the intersection of maximal right ideals and checked against
/// the unit characterization.
pub fn jacobson(ring: &FiniteRing, limits: &Limits) -> Result<ElementSet> {
    jacobson_in(ring, &RightIdealLattice::new(ring, limits)?)
}

pub(crate) fn jacobson_in(ring: &FiniteRing, lattice: &RightIdealLattice) -> Result<ElementSet> {
    let by_ideals = intersect_all(ring.order(), lattice.maximal.iter().map(|&i| &lattice.ideals[i]));
    let by_units = jacobson_by_units(ring);
    if by_ideals != by_units {
        return Err(Error::JacobsonMismatch { by_ideals: by_ideals.to_vec(), by_units: by_units.to_vec() });
    }
    Ok(by_ideals)
}

/// `{a : 1 + ax is a unit for every x commuting with a}`.
pub fn qnil_set(ring: &FiniteRing) -> ElementSet {
    let inverses = ring.inverses();
    let one = ring.one();
    ElementSet::from_indices(
        ring.order(),
        ring.elements().filter(|&a| {
            ring.elements()
                .filter(|&x| ring.commute(a, x))
                .all(|x| inverses[ring.add(one, ring.mul(a, x))].is_some())
        }),
    )
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

    #[test]
    fn jacobson_examples() {
        assert_eq!(jacobson(&z(4), &limits()).unwrap(), set(4, &[0, 2]));
        assert_eq!(jacobson(&z(6), &limits()).unwrap(), set(6, &[0]));
        let m = build_matrix_ring(&z(2), 2, &limits()).unwrap();
        assert_eq!(jacobson(&m, &limits()).unwrap(), set(16, &[0]));
    }

    #[test]
    fn each_route_on_small_rings() {
        let t2 = build_upper_triangular(&z(2), 2, &limits()).unwrap();
        let cases = [(z(6), ElementSet::full(6)), (z(4), set(4, &[0, 2])), (t2, set(8, &[0, 1, 2, 3]))];
        for (ring, expected) in cases {
            let l = limits();
            assert_eq!(delta_r1(&ring, &l).unwrap(), expected, "r1 {}", ring.name());
            assert_eq!(delta_r2(&ring, &l).unwrap(), expected, "r2 {}", ring.name());
            assert_eq!(delta_r3(&ring, &l).unwrap(), expected, "r3 {}", ring.name());
            assert_eq!(delta_r4(&ring, &l).unwrap(), expected, "r4 {}", ring.name());
            assert_eq!(delta_r5(&ring, &l).unwrap(), expected, "r5 {}", ring.name());
        }
    }

    #[test]
    fn consensus_examples() {
        assert!(delta(&z(3), &limits()).unwrap().consensus.is_full());
        assert_eq!(delta(&z(4), &limits()).unwrap().consensus, set(4, &[0, 2]));
        let t = build_upper_triangular(&z(3), 2, &limits()).unwrap();
        let d = delta(&t, &limits()).unwrap();
        assert!(d.agree);
        // stored (a11, a12, a22) base 3; a11 = 0 is the first nine codes
        assert_eq!(d.consensus, set(27, &(0..9).collect::<Vec<_>>()));
        let two = t.add(t.one(), t.one());
        assert!(!d.consensus.contains(two));
    }

    #[test]
    fn trivial_ring_delta_is_everything() {
        let d = delta(&z(1), &limits()).unwrap();
        assert!(d.consensus.is_full());
    }

    #[test]
    fn qnil_examples() {
        assert_eq!(qnil_set(&z(4)), set(4, &[0, 2]));
        assert_eq!(qnil_set(&z(6)), set(6, &[0]));
        for n in [2, 3, 8, 9] {
            assert!(qnil_set(&z(n)).contains(0));
        }
    }
}
