use serde::Serialize;

use super::catalog::AnalyzedRing;
use crate::elements::PropertyName;

/// A catalog ring satisfying every hypothesis but not the conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub ring: String,
    pub hypotheses: Vec<PropertyName>,
    pub conclusion: PropertyName,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_element: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<usize>,
}

/// First catalog ring (in catalog order) refuting `hypotheses ⇒ conclusion`.
pub fn search_counterexample(
    hypotheses: &[PropertyName],
    conclusion: PropertyName,
    catalog: &[AnalyzedRing],
) -> Option<Counterexample> {
    catalog
        .iter()
        .find(|r| hypotheses.iter().all(|&h| r.has(h)) && !r.has(conclusion))
        .map(|r| {
            let verdict = r.verdict(conclusion);
            Counterexample {
                ring: r.name.clone(),
                hypotheses: hypotheses.to_vec(),
                conclusion,
                failing_element: verdict.failing_element,
                witnesses: verdict.witnesses.clone(),
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Limits;
    use crate::verify::{analyze_entries, default_catalog};
    use PropertyName::*;

    #[test]
    fn documented_searches() {
        let catalog = analyze_entries(&default_catalog(), &Limits::default()).unwrap();
        let hit = search_counterexample(&[DeltaQuasipolar], JQuasipolar, &catalog).unwrap();
        assert!(hit.ring == "Z3" || hit.ring == "Mat2(Z2)", "{}", hit.ring);
        assert!(search_counterexample(&[JQuasipolar], DeltaQuasipolar, &catalog).is_none());
        assert!(search_counterexample(&[Boolean], DeltaQuasipolar, &catalog).is_none());
        let z9 = search_counterexample(&[Local, Quasipolar], DeltaQuasipolar, &catalog).unwrap();
        assert_eq!(z9.ring, "Z9");
        assert_eq!(z9.failing_element, Some(1));
    }
}
