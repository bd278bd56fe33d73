//! Element-level and ring-level property deciders.
//!
//! Deciders work off an [`Analysis`] so that radicals, commutants and the ideal
//! lattice are computed once per ring. Witnesses are always the least valid
//! element index.

mod certificate;
mod property;

use rayon::prelude::*;
use serde::Serialize;

pub use certificate::{Certificate, CheckResult, Condition, NamedSet, RawFacts};
pub use property::PropertyName;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::ideals::is_two_sided_ideal;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

pub fn commutant(ring: &FiniteRing, a: usize) -> ElementSet {
    ElementSet::from_indices(ring.order(), ring.elements().filter(|&x| ring.commute(a, x)))
}

pub fn double_commutant(ring: &FiniteRing, a: usize) -> ElementSet {
    let comm = commutant(ring, a);
    ElementSet::from_indices(ring.order(), ring.elements().filter(|&x| comm.iter().all(|y| ring.commute(x, y))))
}

/// Which condition an idempotent `p` must meet to be a spectral idempotent of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralFlavor {
    /// `a + p` a unit and `ap` quasinilpotent
    Quasipolar,
    /// `a + p` nilpotent
    Nil,
    /// `a + p ∈ J(R)`
    Jacobson,
    /// `a + p ∈ δ(R)`
    Delta,
    /// `a + p ∈ δ(R)` with `p` only required to commute with `a`
    WeaklyDelta,
}

impl SpectralFlavor {
    pub fn property(self) -> PropertyName {
        match self {
            SpectralFlavor::Quasipolar => PropertyName::Quasipolar,
            SpectralFlavor::Nil => PropertyName::NilQuasipolar,
            SpectralFlavor::Jacobson => PropertyName::JQuasipolar,
            SpectralFlavor::Delta => PropertyName::DeltaQuasipolar,
            SpectralFlavor::WeaklyDelta => PropertyName::WeaklyDeltaQuasipolar,
        }
    }

    fn of(name: PropertyName) -> Option<Self> {
        Some(match name {
            PropertyName::Quasipolar => SpectralFlavor::Quasipolar,
            PropertyName::NilQuasipolar => SpectralFlavor::Nil,
            PropertyName::JQuasipolar => SpectralFlavor::Jacobson,
            PropertyName::DeltaQuasipolar => SpectralFlavor::Delta,
            PropertyName::WeaklyDeltaQuasipolar => SpectralFlavor::WeaklyDelta,
            _ => return None,
        })
    }
}

/// All idempotents `p` qualifying as a spectral idempotent of `a`, ascending.
pub fn spectral_candidates(an: &Analysis, a: usize, flavor: SpectralFlavor) -> Vec<usize> {
    let ring = an.ring();
    an.idempotents
        .iter()
        .filter(|&p| {
            let placed = match flavor {
                SpectralFlavor::WeaklyDelta => an.commutant(a).contains(p),
                _ => an.in_double_commutant(p, a),
            };
            if !placed {
                return false;
            }
            let s = ring.add(a, p);
            match flavor {
                SpectralFlavor::Quasipolar => an.is_unit(s) && an.qnil.contains(ring.mul(a, p)),
                SpectralFlavor::Nil => an.nilpotents.contains(s),
                SpectralFlavor::Jacobson => an.jacobson.contains(s),
                SpectralFlavor::Delta | SpectralFlavor::WeaklyDelta => an.delta_set().contains(s),
            }
        })
        .collect()
}

fn spectral_certificate(an: &Analysis, a: usize, flavor: SpectralFlavor) -> Option<Certificate> {
    let p = *spectral_candidates(an, a, flavor).first()?;
    let ring = an.ring();
    let s = ring.add(a, p);
    let mut conditions = vec![Condition::Idempotent(p)];
    conditions.push(match flavor {
        SpectralFlavor::WeaklyDelta => Condition::Commutes { x: p, y: a },
        _ => Condition::InDoubleCommutant { p, a },
    });
    conditions.push(Condition::Sum { a, b: p, equals: s });
    match flavor {
        SpectralFlavor::Quasipolar => {
            let ap = ring.mul(a, p);
            conditions.push(Condition::Member { x: s, set: NamedSet::Units });
            conditions.push(Condition::Product { a, b: p, equals: ap });
            conditions.push(Condition::Member { x: ap, set: NamedSet::Qnil });
        }
        SpectralFlavor::Nil => conditions.push(Condition::Member { x: s, set: NamedSet::Nilpotents }),
        SpectralFlavor::Jacobson => conditions.push(Condition::Member { x: s, set: NamedSet::Jacobson }),
        SpectralFlavor::Delta | SpectralFlavor::WeaklyDelta => {
            conditions.push(Condition::Member { x: s, set: NamedSet::Delta })
        }
    }
    Some(Certificate::new(flavor.property(), a, &[("p", p)], conditions, None))
}

/// Idempotent-plus-remainder decompositions `a = e + w`.
#[derive(Clone, Copy)]
struct Split {
    set: NamedSet,
    commuting: bool,
    unique: bool,
    remainder: &'static str,
}

fn split_of(name: PropertyName) -> Option<Split> {
    use PropertyName::*;
    let (set, commuting, unique, remainder) = match name {
        Clean => (NamedSet::Units, false, false, "u"),
        StronglyClean => (NamedSet::Units, true, false, "u"),
        UniquelyClean => (NamedSet::Units, false, true, "u"),
        JClean => (NamedSet::Jacobson, false, false, "w"),
        StronglyJClean => (NamedSet::Jacobson, true, false, "w"),
        DeltaRClean => (NamedSet::Delta, false, false, "w"),
        StronglyDeltaRClean => (NamedSet::Delta, true, false, "w"),
        UniquelyDeltaRClean => (NamedSet::Delta, false, true, "w"),
        _ => return None,
    };
    Some(Split { set, commuting, unique, remainder })
}

fn named(an: &Analysis, set: NamedSet) -> &ElementSet {
    match set {
        NamedSet::Units => &an.units,
        NamedSet::Delta => an.delta_set(),
        NamedSet::Jacobson => &an.jacobson,
        NamedSet::Nilpotents => &an.nilpotents,
        NamedSet::Qnil => &an.qnil,
    }
}

/// Idempotents `e` with `a − e` in the split's set (commuting with `a` when required).
fn split_witnesses(an: &Analysis, a: usize, split: Split) -> impl Iterator<Item = usize> + '_ {
    let ring = an.ring();
    let target = named(an, split.set);
    an.idempotents
        .iter()
        .filter(move |&e| target.contains(ring.sub(a, e)) && (!split.commuting || ring.commute(e, a)))
}

fn split_certificate(an: &Analysis, name: PropertyName, a: usize, split: Split) -> Option<Certificate> {
    let ring = an.ring();
    let (e, count) = if split.unique {
        let all: Vec<usize> = split_witnesses(an, a, split).take(2).collect();
        if all.len() != 1 {
            return None;
        }
        (all[0], Some(1))
    } else {
        (split_witnesses(an, a, split).next()?, None)
    };
    let w = ring.sub(a, e);
    let mut conditions = vec![
        Condition::Idempotent(e),
        Condition::Member { x: w, set: split.set },
        Condition::Sum { a: e, b: w, equals: a },
    ];
    if split.commuting {
        conditions.push(Condition::Commutes { x: e, y: w });
    }
    if split.unique {
        conditions.push(Condition::UniqueIdempotent { a, set: split.set });
    }
    Some(Certificate::new(name, a, &[("e", e), (split.remainder, w)], conditions, count))
}

/// Decides an element-level property; `Ok(None)` means it fails for `a`.
pub fn element_property(an: &Analysis, a: usize, name: PropertyName) -> Result<Option<Certificate>> {
    an.ring().check_element(a)?;
    if let Some(flavor) = SpectralFlavor::of(name) {
        return Ok(spectral_certificate(an, a, flavor));
    }
    match split_of(name) {
        Some(split) => Ok(split_certificate(an, name, a, split)),
        None => Err(Error::RingLevelProperty(name)),
    }
}

/// Outcome of a ring-level query. A failing element is the least element that
/// breaks the property; `witnesses` carries supporting elements (the
/// non-commuting partner, the competing idempotents, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingVerdict {
    pub property: PropertyName,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_element: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<usize>,
}

impl RingVerdict {
    fn holds(property: PropertyName) -> Self {
        RingVerdict { property, holds: true, failing_element: None, witnesses: Vec::new() }
    }

    fn fails(property: PropertyName, element: usize, witnesses: Vec<usize>) -> Self {
        RingVerdict { property, holds: false, failing_element: Some(element), witnesses }
    }
}

/// Least element for which `bad` yields a witness list.
fn first_failure<F>(an: &Analysis, property: PropertyName, bad: F) -> RingVerdict
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync,
{
    match (0..an.order()).into_par_iter().find_map_first(|a| bad(a).map(|w| (a, w))) {
        Some((a, w)) => RingVerdict::fails(property, a, w),
        None => RingVerdict::holds(property),
    }
}

/// Decides a property for the whole ring. Element-level names mean "every
/// element has it". The zero ring satisfies everything vacuously.
pub fn ring_property(an: &Analysis, name: PropertyName) -> Result<RingVerdict> {
    use PropertyName::*;
    let ring = an.ring();
    if ring.is_trivial() {
        return Ok(RingVerdict::holds(name));
    }
    let one = ring.one();
    let verdict = match name {
        _ if name.is_element_level() => {
            if let Some(split) = split_of(name).filter(|s| s.unique) {
                first_failure(an, name, |a| {
                    let found: Vec<usize> = split_witnesses(an, a, split).take(2).collect();
                    (found.len() != 1).then_some(found)
                })
            } else {
                first_failure(an, name, |a| match element_property(an, a, name) {
                    Ok(Some(_)) => None,
                    _ => Some(Vec::new()),
                })
            }
        }
        Boolean => first_failure(an, name, |a| (ring.mul(a, a) != a).then(Vec::new)),
        Abelian => first_failure(an, name, |e| {
            if !an.idempotents.contains(e) {
                return None;
            }
            ring.elements().find(|&x| !ring.commute(e, x)).map(|x| vec![x])
        }),
        Local => decide_local(an)?,
        Semisimple => match an.jacobson.iter().find(|&x| x != ring.zero()) {
            Some(x) => RingVerdict::fails(name, x, Vec::new()),
            None => RingVerdict::holds(name),
        },
        VonNeumannRegular => first_failure(an, name, |a| {
            (!ring.elements().any(|b| ring.mul(ring.mul(a, b), a) == a)).then(Vec::new)
        }),
        StronglyRegular => first_failure(an, name, |a| {
            (!an.principal_right_ideal(ring.mul(a, a)).contains(a)).then(Vec::new)
        }),
        StronglyPiRegular => first_failure(an, name, |a| {
            let mut power = a;
            for _ in 0..ring.order() {
                let next = ring.mul(power, a);
                if an.principal_right_ideal(next).contains(power) {
                    return None;
                }
                power = next;
            }
            Some(Vec::new())
        }),
        Exchange => first_failure(an, name, |a| {
            let a_r = an.principal_right_ideal(a);
            let co_r = an.principal_right_ideal(ring.sub(one, a));
            (!an.idempotents.iter().any(|e| a_r.contains(e) && co_r.contains(ring.sub(one, e)))).then(Vec::new)
        }),
        RightPp => first_failure(an, name, |a| {
            an.lattice.summand[an.lattice.principal_of[a]].is_none().then(Vec::new)
        }),
        _ => unreachable!("every property name is covered"),
    };
    Ok(verdict)
}

/// Local iff the non-units form a two-sided ideal; cross-checked against the
/// count of maximal right ideals.
fn decide_local(an: &Analysis) -> Result<RingVerdict> {
    let ring = an.ring();
    let nonunits = an.units.complement();
    let by_ideal = is_two_sided_ideal(ring, &nonunits);
    let by_maximal = an.lattice.maximal.len() == 1;
    if by_ideal != by_maximal {
        return Err(Error::Fault(format!(
            "{}: non-unit ideal test says {by_ideal}, maximal right ideal count is {}",
            ring.name(),
            an.lattice.maximal.len()
        )));
    }
    if by_ideal {
        return Ok(RingVerdict::holds(PropertyName::Local));
    }
    for a in nonunits.iter() {
        if let Some(b) = nonunits.iter().find(|&b| an.is_unit(ring.add(a, b))) {
            return Ok(RingVerdict::fails(PropertyName::Local, a, vec![b]));
        }
    }
    Ok(RingVerdict { property: PropertyName::Local, holds: false, failing_element: None, witnesses: Vec::new() })
}

/// Whether idempotents lift modulo the two-sided ideal `ideal`; on failure
/// returns the least `a` with `a² − a ∈ I` and no idempotent in `a + I`.
pub fn idempotents_lift(ring: &FiniteRing, ideal: &ElementSet) -> Result<(bool, Option<usize>)> {
    if ideal.ring_order() != ring.order() || !is_two_sided_ideal(ring, ideal) {
        return Err(Error::NotTwoSidedIdeal(format!("{ideal:?}")));
    }
    let idempotents = ring.idempotents();
    let failing = ring.elements().find(|&a| {
        ideal.contains(ring.sub(ring.mul(a, a), a)) && !idempotents.iter().any(|e| ideal.contains(ring.sub(a, e)))
    });
    Ok((failing.is_none(), failing))
}
