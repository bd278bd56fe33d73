//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion. Runs without the
//! libtest harness so every line is visible; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ringlab::elements::PropertyName;
use ringlab::radicals::{delta_r1, delta_r2, delta_r3, delta_r4, delta_r5};
use ringlab::ring::decode_mixed;
use ringlab::verify::{analyze_entries, default_catalog, suite_passes, theorem_suite, AnalyzedRing, SuiteOptions, TheoremStatus};
use ringlab::{element_property, Analysis, ElementSet, FiniteRing, Limits, RingReport};

/// Wall-clock budget for the five-route δ computation over the whole catalog.
const CONSENSUS_BUDGET: Duration = Duration::from_secs(60);

fn catalog() -> &'static [AnalyzedRing] {
    static CATALOG: OnceLock<Vec<AnalyzedRing>> = OnceLock::new();
    CATALOG.get_or_init(|| analyze_entries(&default_catalog(), &Limits::default()).expect("catalog builds"))
}

fn find(name: &str) -> &'static AnalyzedRing {
    catalog().iter().find(|r| r.name == name).unwrap_or_else(|| panic!("{name} not in catalog"))
}

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn criterion_five_way_consensus() -> Verdict {
    let limits = Limits::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for entry in default_catalog() {
        let ring = entry.build(&limits).map_err(|e| e.to_string())?;
        let routes: Vec<ElementSet> = [delta_r1, delta_r2, delta_r3, delta_r4, delta_r5]
            .iter()
            .map(|route| route(&ring, &limits))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if routes.iter().any(|r| r != &routes[0]) {
            failures.push(format!("{}: {:?}", entry.name, routes));
        }
    }
    let elapsed = start.elapsed();
    if !failures.is_empty() {
        return Err(format!("routes disagree on {}", failures.join("; ")));
    }
    if elapsed > CONSENSUS_BUDGET {
        return Err(format!("took {elapsed:.2?}, budget {CONSENSUS_BUDGET:?}"));
    }
    Ok(format!("{} rings agree, {elapsed:.2?}", catalog().len()))
}

fn criterion_example_regressions() -> Verdict {
    use PropertyName::*;
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    let t22 = find("T2(Z2)");
    let zero_corner: Vec<usize> =
        t22.ring().elements().filter(|&x| decode_mixed(x, &[2, 2, 2])[0] == 0).collect();
    expect(zero_corner.len() == 4, "T2(Z2) has 4 elements with zero (1,1) entry");
    expect(t22.analysis.delta_set().to_vec() == zero_corner, "δ(T2(Z2)) = zero (1,1) entry");
    expect(t22.has(DeltaQuasipolar), "T2(Z2) δ-quasipolar");

    for name in ["T2(Z3)", "CT2(Z3)"] {
        let r = find(name);
        let two = r.ring().add(r.ring().one(), r.ring().one());
        expect(!r.analysis.delta_set().contains(two), &format!("1+1 ∉ δ({name})"));
        expect(!r.has(DeltaQuasipolar), &format!("{name} not δ-quasipolar"));
    }

    let m = find("Mat2(Z2)");
    expect(m.analysis.jacobson.to_vec() == vec![0], "J(Mat2(Z2)) = 0");
    expect(m.analysis.delta_set().is_full(), "δ(Mat2(Z2)) = R");
    expect(m.has(DeltaQuasipolar), "Mat2(Z2) δ-quasipolar");
    expect(!m.has(JQuasipolar), "Mat2(Z2) not J-quasipolar");

    let z3 = find("Z3");
    expect(z3.has(DeltaQuasipolar), "Z3 δ-quasipolar");
    expect(!z3.has(JQuasipolar), "Z3 not J-quasipolar");

    if failures.is_empty() {
        Ok("T2(Z2), T2(Z3), CT2(Z3), Mat2(Z2), Z3 match".into())
    } else {
        Err(failures.join("; "))
    }
}

/// Claims that must individually report holds-on-catalog.
const REQUIRED_CLAIMS: &[&str] = &[
    "two-in-delta",
    "delta-qp-implies-right-pp",
    "abelian-right-pp-strongly-regular",
    "strongly-regular-implies-quasipolar",
    "quasipolar-implies-strongly-clean",
    "delta-quotient-boolean-lifting",
    "delta-qp-iff-delta-r-clean-abelian",
    "delta-qp-exchange-clean-quotient",
    "weakly-iff-strongly-delta-r-clean",
    "weakly-delta-qp-product-closure",
    "weakly-delta-qp-quotient-closure",
    "local-five-way-equivalence",
];

fn criterion_theorem_suite() -> Verdict {
    let results = theorem_suite(catalog(), &SuiteOptions::default()).map_err(|e| e.to_string())?;
    let mut failures: Vec<String> = results
        .iter()
        .filter(|r| r.status == TheoremStatus::Violated)
        .map(|r| {
            let rings: Vec<&str> = r.witnesses.iter().map(|w| w.ring.as_str()).collect();
            format!("{} violated on {}", r.id, rings.join(", "))
        })
        .collect();
    for id in REQUIRED_CLAIMS {
        match results.iter().find(|r| r.id == *id) {
            None => failures.push(format!("{id} missing")),
            Some(r) if r.status != TheoremStatus::HoldsOnCatalog && r.status != TheoremStatus::Violated => {
                failures.push(format!("{id} is {}", r.status.as_str()))
            }
            _ => {}
        }
    }
    if let Some(local) = results.iter().find(|r| r.id == "local-five-way-equivalence") {
        for ring in ["Z4", "Z8", "Z9"] {
            if !local.applicable_rings.iter().any(|n| n == ring) {
                failures.push(format!("local-five-way-equivalence not applied to {ring}"));
            }
        }
    }
    if suite_passes(&results) && failures.is_empty() {
        Ok(format!("{} claims, none violated", results.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_single_disputed_claim() -> Verdict {
    let results = theorem_suite(catalog(), &SuiteOptions::default()).map_err(|e| e.to_string())?;
    let disputed: Vec<_> = results.iter().filter(|r| r.status == TheoremStatus::DisputedPaperClaim).collect();
    if disputed.len() != 1 {
        let ids: Vec<&str> = disputed.iter().map(|r| r.id.as_str()).collect();
        return Err(format!("expected exactly one disputed claim, found {ids:?}"));
    }
    let claim = disputed[0];
    if claim.id != "local-quasipolar-implies-delta-qp" {
        return Err(format!("disputed claim is {}", claim.id));
    }
    if !claim.witnesses.iter().any(|w| w.ring == "Z9") {
        return Err("Z9 is not among the witnesses".into());
    }
    let z9 = find("Z9");
    use PropertyName::*;
    if !(z9.has(Local) && z9.has(Quasipolar) && !z9.has(DeltaQuasipolar)) {
        return Err("Z9 is not local ∧ quasipolar ∧ ¬δ-quasipolar".into());
    }
    Ok(format!("{} witnessed by Z9", claim.id))
}

/// Independent δ-quasipolar decision straight from the tables: scan every
/// idempotent of comm²(a) for one with `a + p` in the δ mask.
fn oracle_delta_quasipolar(ring: &FiniteRing, delta: &ElementSet, a: usize) -> bool {
    let n = ring.order();
    let comm: Vec<usize> = (0..n).filter(|&x| ring.mul(a, x) == ring.mul(x, a)).collect();
    (0..n)
        .filter(|&p| ring.mul(p, p) == p)
        .filter(|&p| comm.iter().all(|&x| ring.mul(p, x) == ring.mul(x, p)))
        .any(|p| delta.contains(ring.add(a, p)))
}

fn criterion_oracle_equivalence() -> Verdict {
    let limits = Limits::default();
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for r in catalog() {
        let ring = r.ring();
        let delta = delta_r1(ring, &limits).map_err(|e| e.to_string())?;
        for a in ring.elements() {
            let decided = element_property(&r.analysis, a, PropertyName::DeltaQuasipolar)
                .map_err(|e| e.to_string())?
                .is_some();
            if decided != oracle_delta_quasipolar(ring, &delta, a) {
                mismatches.push(format!("{}[{a}]", r.name));
            }
            checked += 1;
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{checked} elements, 0 mismatches"))
    } else {
        Err(format!("{} mismatches: {}", mismatches.len(), mismatches.join(", ")))
    }
}

fn criterion_report_determinism() -> Verdict {
    let limits = Limits::default();
    let render = |entry: &ringlab::verify::CatalogEntry| -> Result<(String, String), String> {
        let ring = entry.build(&limits).map_err(|e| e.to_string())?;
        let report = RingReport::new(&Analysis::new(ring, &limits).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        Ok((report.to_json(), report.to_text()))
    };
    let mut differing = Vec::new();
    let entries = default_catalog();
    for entry in &entries {
        if render(entry)? != render(entry)? {
            differing.push(entry.name.clone());
        }
    }
    if differing.is_empty() {
        Ok(format!("{} rings byte-identical", entries.len()))
    } else {
        Err(format!("output differs for {}", differing.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 five-way δ consensus", criterion_five_way_consensus),
        ("2 example regressions", criterion_example_regressions),
        ("3 theorem suite passes on the default catalog", criterion_theorem_suite),
        ("4 exactly one disputed claim, witnessed by Z9", criterion_single_disputed_claim),
        ("5 δ-quasipolar decision matches brute-force oracle", criterion_oracle_equivalence),
        ("6 report determinism", criterion_report_determinism),
    ];
    let mut failed = 0;
    for (label, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {label}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {label}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
