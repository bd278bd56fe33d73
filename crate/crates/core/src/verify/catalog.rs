use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::elements::{ring_property, PropertyName, RingVerdict};
use crate::error::Result;
use crate::preset::Recipe;
use crate::ring::{FiniteRing, Limits};

/// Facts a catalog entry is known to satisfy; checked against recomputation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedFacts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobson: Option<Vec<usize>>,
    /// `|R / δ(R)|`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_index: Option<usize>,
    pub properties: Vec<(PropertyName, bool)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub expected: ExpectedFacts,
}

impl CatalogEntry {
    pub fn build(&self, limits: &Limits) -> Result<FiniteRing> {
        Ok(self.recipe.build(limits)?.with_name(self.name.clone()))
    }
}

fn entry(name: &str, recipe: &str, expected: ExpectedFacts) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        recipe: recipe.parse().expect("catalog recipes parse"),
        expected,
    }
}

fn props(list: &[(PropertyName, bool)]) -> ExpectedFacts {
    ExpectedFacts { properties: list.to_vec(), ..ExpectedFacts::default() }
}

/// The built-in rings: small ℤ_n, products, full/triangular matrix rings,
/// Dorroh extensions and two quotients.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use PropertyName::*;
    let range = |n: usize| Some((0..n).collect::<Vec<_>>());
    vec![
        entry("Z2", "zmod:2", props(&[(Boolean, true), (DeltaQuasipolar, true)])),
        entry(
            "Z3",
            "zmod:3",
            ExpectedFacts {
                delta: range(3),
                jacobson: Some(vec![0]),
                properties: vec![(DeltaQuasipolar, true), (JQuasipolar, false), (Boolean, false), (JClean, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "Z4",
            "zmod:4",
            ExpectedFacts {
                delta: Some(vec![0, 2]),
                jacobson: Some(vec![0, 2]),
                delta_index: Some(2),
                properties: vec![(DeltaQuasipolar, true), (UniquelyClean, true), (Local, true)],
            },
        ),
        entry("Z6", "zmod:6", props(&[(DeltaQuasipolar, true), (Semisimple, true)])),
        entry(
            "Z8",
            "zmod:8",
            ExpectedFacts { delta: Some(vec![0, 2, 4, 6]), properties: vec![(Local, true)], ..ExpectedFacts::default() },
        ),
        entry(
            "Z9",
            "zmod:9",
            ExpectedFacts {
                delta: Some(vec![0, 3, 6]),
                jacobson: Some(vec![0, 3, 6]),
                properties: vec![(Local, true), (Quasipolar, true), (DeltaQuasipolar, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry("Z2xZ2", "product:zmod:2,zmod:2", props(&[(Boolean, true)])),
        entry("Z2xZ3", "product:zmod:2,zmod:3", props(&[(DeltaQuasipolar, true), (Semisimple, true)])),
        entry(
            "Mat2(Z2)",
            "mat:2:zmod:2",
            ExpectedFacts {
                delta: range(16),
                jacobson: Some(vec![0]),
                properties: vec![(DeltaQuasipolar, true), (JQuasipolar, false), (Abelian, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "Mat2(Z3)",
            "mat:2:zmod:3",
            ExpectedFacts {
                jacobson: Some(vec![0]),
                properties: vec![(DeltaQuasipolar, true), (Semisimple, true)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "T2(Z2)",
            "tri:2:zmod:2",
            ExpectedFacts {
                delta: range(4),
                jacobson: Some(vec![0, 2]),
                properties: vec![(DeltaQuasipolar, true), (RightPp, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "T2(Z3)",
            "tri:2:zmod:3",
            ExpectedFacts {
                delta: range(9),
                jacobson: Some(vec![0, 3, 6]),
                properties: vec![(DeltaQuasipolar, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "CT2(Z2)",
            "cdtri:2:zmod:2",
            ExpectedFacts {
                delta: Some(vec![0, 1]),
                jacobson: Some(vec![0, 1]),
                properties: vec![(Local, true)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "CT2(Z3)",
            "cdtri:2:zmod:3",
            ExpectedFacts {
                delta: range(3),
                properties: vec![(Local, true), (DeltaQuasipolar, false)],
                ..ExpectedFacts::default()
            },
        ),
        entry(
            "CT3(Z2)",
            "cdtri:3:zmod:2",
            ExpectedFacts { jacobson: range(8), properties: vec![(Local, true)], ..ExpectedFacts::default() },
        ),
        entry("D(Z2,Z2)", "dorroh:zmod:2,zmod:2", props(&[(Boolean, true)])),
        entry(
            "D(Z4,Z2)",
            "dorroh:zmod:4,zmod:2",
            ExpectedFacts {
                delta: Some(vec![0, 1, 4, 5]),
                jacobson: Some(vec![0, 4]),
                properties: vec![(DeltaQuasipolar, true)],
                ..ExpectedFacts::default()
            },
        ),
        entry("T2(Z2)/delta", "quot:tri:2:zmod:2,delta", props(&[(Boolean, true)])),
        entry("Z4/<2>", "quot:zmod:4,{2}", props(&[(Boolean, true)])),
    ]
}

/// A catalog ring with its analysis and every ring-level verdict precomputed.
#[derive(Debug, Clone)]
pub struct AnalyzedRing {
    pub name: String,
    pub recipe: Option<Recipe>,
    pub expected: Option<ExpectedFacts>,
    pub analysis: Analysis,
    verdicts: Vec<RingVerdict>,
}

impl AnalyzedRing {
    pub fn new(
        ring: FiniteRing,
        recipe: Option<Recipe>,
        expected: Option<ExpectedFacts>,
        limits: &Limits,
    ) -> Result<Self> {
        let analysis = Analysis::new(ring, limits)?;
        let verdicts =
            PropertyName::ALL.iter().map(|&p| ring_property(&analysis, p)).collect::<Result<Vec<_>>>()?;
        Ok(AnalyzedRing { name: analysis.ring().name().to_string(), recipe, expected, analysis, verdicts })
    }

    pub fn from_entry(entry: &CatalogEntry, limits: &Limits) -> Result<Self> {
        Self::new(entry.build(limits)?, Some(entry.recipe.clone()), Some(entry.expected.clone()), limits)
    }

    pub fn ring(&self) -> &FiniteRing {
        self.analysis.ring()
    }

    pub fn verdict(&self, property: PropertyName) -> &RingVerdict {
        &self.verdicts[property as usize]
    }

    pub fn has(&self, property: PropertyName) -> bool {
        self.verdict(property).holds
    }

    /// Human-readable descriptions of every expected fact that recomputation
    /// contradicts.
    pub fn expectation_mismatches(&self) -> Vec<String> {
        let Some(expected) = &self.expected else {
            return Vec::new();
        };
        let an = &self.analysis;
        let mut out = Vec::new();
        if let Some(delta) = &expected.delta {
            if &an.delta_set().to_vec() != delta {
                out.push(format!("delta: expected {delta:?}, computed {:?}", an.delta_set().to_vec()));
            }
        }
        if let Some(j) = &expected.jacobson {
            if &an.jacobson.to_vec() != j {
                out.push(format!("jacobson: expected {j:?}, computed {:?}", an.jacobson.to_vec()));
            }
        }
        if let Some(index) = expected.delta_index {
            let computed = an.order() / an.delta_set().len();
            if computed != index {
                out.push(format!("|R/delta|: expected {index}, computed {computed}"));
            }
        }
        for &(p, value) in &expected.properties {
            if self.has(p) != value {
                out.push(format!("{p}: expected {value}, computed {}", self.has(p)));
            }
        }
        out
    }
}

/// Builds and analyses every entry, in parallel; the output keeps catalog order.
pub fn analyze_entries(entries: &[CatalogEntry], limits: &Limits) -> Result<Vec<AnalyzedRing>> {
    entries.par_iter().map(|e| AnalyzedRing::from_entry(e, limits)).collect()
}

/// Analyses user-supplied rings (no recipe, no expectations).
pub fn analyze_rings(rings: Vec<FiniteRing>, limits: &Limits) -> Result<Vec<AnalyzedRing>> {
    rings.into_par_iter().map(|r| AnalyzedRing::new(r, None, None, limits)).collect()
}
