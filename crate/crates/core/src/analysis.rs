//! Per-ring cache of everything the property deciders consult.

use crate::error::Result;
use crate::ideals::RightIdealLattice;
use crate::radicals::{delta_in, jacobson_in, DeltaComputation};
use crate::ring::{FiniteRing, Limits};
use crate::set::ElementSet;

/// A ring together with its structural sets, computed once.
///
/// Construction fails if the two Jacobson routes or the five δ routes disagree,
/// so every `Analysis` in hand has passed those self-checks.
#[derive(Debug, Clone)]
pub struct Analysis {
    ring: FiniteRing,
    limits: Limits,
    pub inverses: Vec<Option<usize>>,
    pub units: ElementSet,
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
    pub lattice: RightIdealLattice,
    pub jacobson: ElementSet,
    pub delta: DeltaComputation,
    pub qnil: ElementSet,
    commutants: Vec<ElementSet>,
}

impl Analysis {
    pub fn new(ring: FiniteRing, limits: &Limits) -> Result<Self> {
        let n = ring.order();
        let lattice = RightIdealLattice::new(&ring, limits)?;
        let jacobson = jacobson_in(&ring, &lattice)?;
        let delta = delta_in(&ring, &lattice, &jacobson)?;
        let inverses = ring.inverses();
        let units = ElementSet::from_indices(n, ring.elements().filter(|&a| inverses[a].is_some()));
        let commutants: Vec<ElementSet> = ring
            .elements()
            .map(|a| ElementSet::from_indices(n, ring.elements().filter(|&x| ring.commute(a, x))))
            .collect();
        let one = ring.one();
        let qnil = ElementSet::from_indices(
            n,
            ring.elements()
                .filter(|&a| commutants[a].iter().all(|x| inverses[ring.add(one, ring.mul(a, x))].is_some())),
        );
        Ok(Analysis {
            idempotents: ring.idempotents(),
            nilpotents: ring.nilpotents(),
            inverses,
            units,
            lattice,
            jacobson,
            delta,
            qnil,
            commutants,
            limits: *limits,
            ring,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }

    /// δ(R) (the agreed value of the five characterizations).
    pub fn delta_set(&self) -> &ElementSet {
        &self.delta.consensus
    }

    pub fn socle(&self) -> &ElementSet {
        &self.lattice.socle
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverses[a].is_some()
    }

    pub fn commutant(&self, a: usize) -> &ElementSet {
        &self.commutants[a]
    }

    /// `x ∈ comm²(a)` iff `comm(a) ⊆ comm(x)`.
    pub fn in_double_commutant(&self, x: usize, a: usize) -> bool {
        self.commutants[a].is_subset(&self.commutants[x])
    }

    pub fn double_commutant(&self, a: usize) -> ElementSet {
        ElementSet::from_indices(self.order(), self.ring.elements().filter(|&x| self.in_double_commutant(x, a)))
    }

    pub fn center(&self) -> ElementSet {
        self.commutants[self.ring.zero()].clone().intersection(&ElementSet::from_indices(
            self.order(),
            self.ring.elements().filter(|&x| self.commutants[x].is_full()),
        ))
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.commutants[a].is_full()
    }

    /// `{x : ∃ r, x = a·r}` indexed through the lattice.
    pub fn principal_right_ideal(&self, a: usize) -> &ElementSet {
        &self.lattice.ideals[self.lattice.principal_of[a]]
    }
}
