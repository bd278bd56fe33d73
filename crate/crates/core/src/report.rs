//! Deterministic per-ring report: structural masks, all five δ routes, the
//! predicate table and every element's δ-spectral idempotents.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::elements::{ring_property, spectral_candidates, PropertyName, SpectralFlavor};
use crate::error::Result;
use crate::radicals::DeltaComputation;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateEntry {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_element: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub name: String,
    pub order: usize,
    /// The zero ring: every predicate holds vacuously.
    pub trivial: bool,
    pub units: ElementSet,
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
    pub socle: ElementSet,
    pub jacobson: ElementSet,
    pub qnil: ElementSet,
    pub delta: DeltaComputation,
    pub predicates: BTreeMap<PropertyName, PredicateEntry>,
    /// `delta_spectral[a]` lists the δ-spectral idempotents of `a`.
    pub delta_spectral: Vec<Vec<usize>>,
}

impl RingReport {
    pub fn new(an: &Analysis) -> Result<Self> {
        let ring = an.ring();
        let mut predicates = BTreeMap::new();
        for p in PropertyName::ALL {
            let v = ring_property(an, p)?;
            predicates.insert(p, PredicateEntry { holds: v.holds, failing_element: v.failing_element });
        }
        Ok(RingReport {
            name: ring.name().to_string(),
            order: ring.order(),
            trivial: ring.is_trivial(),
            units: an.units.clone(),
            idempotents: an.idempotents.clone(),
            nilpotents: an.nilpotents.clone(),
            socle: an.socle().clone(),
            jacobson: an.jacobson.clone(),
            qnil: an.qnil.clone(),
            delta: an.delta.clone(),
            predicates,
            delta_spectral: ring.elements().map(|a| spectral_candidates(an, a, SpectralFlavor::Delta)).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {} (order {}){}", self.name, self.order, if self.trivial { " [trivial]" } else { "" });
        let sets: [(&str, &ElementSet); 6] = [
            ("units", &self.units),
            ("idempotents", &self.idempotents),
            ("nilpotents", &self.nilpotents),
            ("socle", &self.socle),
            ("J(R)", &self.jacobson),
            ("qnil(R)", &self.qnil),
        ];
        for (label, set) in sets {
            let _ = writeln!(out, "  {label:<12} {:?}", set);
        }
        let _ = writeln!(out, "  {:<12} {:?}{}", "delta(R)", self.delta.consensus, if self.delta.agree { "" } else { "  (routes disagree)" });
        for (i, mask) in self.delta.masks().iter().enumerate() {
            let _ = writeln!(out, "    route {}     {:?}", i + 1, mask);
        }
        let _ = writeln!(out, "predicates");
        for (p, entry) in &self.predicates {
            let failing = entry.failing_element.map(|a| format!("  (fails at {a})")).unwrap_or_default();
            let _ = writeln!(out, "  {:<26} {}{failing}", p.as_str(), entry.holds);
        }
        let _ = writeln!(out, "delta-spectral idempotents");
        for (a, list) in self.delta_spectral.iter().enumerate() {
            let _ = writeln!(out, "  {a:>4}: {list:?}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_zmod, Limits};

    fn report(n: usize) -> RingReport {
        let limits = Limits::default();
        RingReport::new(&Analysis::new(build_zmod(n, &limits).unwrap(), &limits).unwrap()).unwrap()
    }

    #[test]
    fn z3_and_z4_reports() {
        let z3 = report(3);
        assert!(z3.delta.consensus.is_full());
        assert!(z3.predicates[&PropertyName::DeltaQuasipolar].holds);
        assert!(!z3.predicates[&PropertyName::JQuasipolar].holds);
        let z4 = report(4);
        assert_eq!(z4.delta.consensus.to_vec(), vec![0, 2]);
        assert!(z4.predicates[&PropertyName::UniquelyClean].holds);
    }

    #[test]
    fn trivial_ring_flagged() {
        let r = report(1);
        assert!(r.trivial);
        assert!(r.predicates.values().all(|e| e.holds));
        assert!(r.to_text().contains("[trivial]"));
    }

    #[test]
    fn json_is_stable() {
        let json = report(6).to_json();
        assert_eq!(json, report(6).to_json());
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["predicates"]["delta-quasipolar"]["holds"], true);
        assert_eq!(value["delta"]["r3"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    }
}
