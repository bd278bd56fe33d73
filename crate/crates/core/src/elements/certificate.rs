use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::PropertyName;
use crate::error::Result;
use crate::radicals::{delta, jacobson_by_units, qnil_set};
use crate::ring::{FiniteRing, Limits};
use crate::set::ElementSet;

/// Distinguished subsets a certificate can refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedSet {
    Units,
    Delta,
    Jacobson,
    Nilpotents,
    Qnil,
}

impl NamedSet {
    fn symbol(self) -> &'static str {
        match self {
            NamedSet::Units => "U(R)",
            NamedSet::Delta => "δ(R)",
            NamedSet::Jacobson => "J(R)",
            NamedSet::Nilpotents => "nil(R)",
            NamedSet::Qnil => "qnil(R)",
        }
    }
}

/// One atomic fact a certificate rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Idempotent(usize),
    Member { x: usize, set: NamedSet },
    Sum { a: usize, b: usize, equals: usize },
    Product { a: usize, b: usize, equals: usize },
    Commutes { x: usize, y: usize },
    InDoubleCommutant { p: usize, a: usize },
    /// Exactly one idempotent `e` has `a − e` in the set.
    UniqueIdempotent { a: usize, set: NamedSet },
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Condition::Idempotent(p) => write!(f, "{p}·{p} = {p}"),
            Condition::Member { x, set } => write!(f, "{x} ∈ {}", set.symbol()),
            Condition::Sum { a, b, equals } => write!(f, "{a} + {b} = {equals}"),
            Condition::Product { a, b, equals } => write!(f, "{a}·{b} = {equals}"),
            Condition::Commutes { x, y } => write!(f, "{x}·{y} = {y}·{x}"),
            Condition::InDoubleCommutant { p, a } => write!(f, "{p} ∈ comm²({a})"),
            Condition::UniqueIdempotent { a, set } => {
                write!(f, "exactly one idempotent e with {a} − e ∈ {}", set.symbol())
            }
        }
    }
}

/// Structural sets recomputed straight from the tables, independent of any
/// cached analysis. Jacobson uses the unit characterization here.
pub struct RawFacts {
    pub units: ElementSet,
    pub delta: ElementSet,
    pub jacobson: ElementSet,
    pub nilpotents: ElementSet,
    pub qnil: ElementSet,
}

impl RawFacts {
    pub fn compute(ring: &FiniteRing, limits: &Limits) -> Result<Self> {
        Ok(RawFacts {
            units: ring.units(),
            delta: delta(ring, limits)?.consensus,
            jacobson: jacobson_by_units(ring),
            nilpotents: ring.nilpotents(),
            qnil: qnil_set(ring),
        })
    }

    fn set(&self, set: NamedSet) -> &ElementSet {
        match set {
            NamedSet::Units => &self.units,
            NamedSet::Delta => &self.delta,
            NamedSet::Jacobson => &self.jacobson,
            NamedSet::Nilpotents => &self.nilpotents,
            NamedSet::Qnil => &self.qnil,
        }
    }
}

impl Condition {
    /// Evaluates the condition by direct table lookups.
    pub fn holds(&self, ring: &FiniteRing, facts: &RawFacts) -> bool {
        let in_range = |x: usize| x < ring.order();
        match *self {
            Condition::Idempotent(p) => in_range(p) && ring.mul(p, p) == p,
            Condition::Member { x, set } => in_range(x) && facts.set(set).contains(x),
            Condition::Sum { a, b, equals } => {
                in_range(a) && in_range(b) && ring.add(a, b) == equals
            }
            Condition::Product { a, b, equals } => {
                in_range(a) && in_range(b) && ring.mul(a, b) == equals
            }
            Condition::Commutes { x, y } => in_range(x) && in_range(y) && ring.commute(x, y),
            Condition::InDoubleCommutant { p, a } => {
                in_range(p)
                    && in_range(a)
                    && ring.elements().filter(|&y| ring.commute(a, y)).all(|y| ring.commute(p, y))
            }
            Condition::UniqueIdempotent { a, set } => {
                in_range(a)
                    && ring
                        .elements()
                        .filter(|&e| ring.mul(e, e) == e && facts.set(set).contains(ring.sub(a, e)))
                        .count()
                        == 1
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub description: String,
    pub holds: bool,
}

/// Evidence that an element has a property: named witnesses plus the list of
/// atomic conditions they satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub property: PropertyName,
    pub element: usize,
    pub witnesses: BTreeMap<String, usize>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_count: Option<usize>,
    #[serde(skip)]
    conditions: Vec<Condition>,
}

impl Certificate {
    pub(crate) fn new(
        property: PropertyName,
        element: usize,
        witnesses: &[(&str, usize)],
        conditions: Vec<Condition>,
        witness_count: Option<usize>,
    ) -> Self {
        let checks = conditions
            .iter()
            .map(|c| CheckResult { description: c.to_string(), holds: true })
            .collect();
        Certificate {
            property,
            element,
            witnesses: witnesses.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            checks,
            witness_count,
            conditions,
        }
    }

    pub fn conditions(&self) -> &[Condition] {
        &self.conditions
    }

    pub fn witness(&self, name: &str) -> Option<usize> {
        self.witnesses.get(name).copied()
    }

    /// Re-evaluates every condition against the raw tables, returning the fresh
    /// check list.
    pub fn recheck_with(&self, ring: &FiniteRing, facts: &RawFacts) -> Vec<CheckResult> {
        self.conditions
            .iter()
            .map(|c| CheckResult { description: c.to_string(), holds: c.holds(ring, facts) })
            .collect()
    }

    pub fn recheck(&self, ring: &FiniteRing, limits: &Limits) -> Result<bool> {
        let facts = RawFacts::compute(ring, limits)?;
        Ok(self.recheck_with(ring, &facts).iter().all(|c| c.holds))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
