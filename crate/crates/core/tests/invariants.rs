use std::sync::OnceLock;

use proptest::prelude::*;

use ringlab::elements::{RawFacts, SpectralFlavor};
use ringlab::ideals::{is_essential, two_sided_closure, RightIdealLattice};
use ringlab::ring::{build_product, build_quotient, decode_mixed, verify_axioms};
use ringlab::verify::{analyze_entries, default_catalog, AnalyzedRing};
use ringlab::{element_property, spectral_candidates, Analysis, ElementSet, Limits, PropertyName, Recipe};

fn catalog() -> &'static [AnalyzedRing] {
    static CATALOG: OnceLock<Vec<AnalyzedRing>> = OnceLock::new();
    CATALOG.get_or_init(|| analyze_entries(&default_catalog(), &Limits::default()).unwrap())
}

/// Small factors for product and quotient experiments.
const SMALL: &[&str] = &["zmod:2", "zmod:3", "zmod:4", "zmod:6", "tri:2:zmod:2", "cdtri:2:zmod:3", "zmod:9"];

fn small(i: usize) -> ringlab::FiniteRing {
    SMALL[i].parse::<Recipe>().unwrap().build(&Limits::default()).unwrap()
}

fn delta_qp(an: &Analysis, a: usize) -> bool {
    element_property(an, a, PropertyName::DeltaQuasipolar).unwrap().is_some()
}

#[test]
fn every_certificate_rechecks_from_raw_tables() {
    let limits = Limits::default();
    for r in catalog() {
        let facts = RawFacts::compute(r.ring(), &limits).unwrap();
        for p in PropertyName::ALL.into_iter().filter(|p| p.is_element_level()) {
            for a in r.ring().elements() {
                if let Some(cert) = element_property(&r.analysis, a, p).unwrap() {
                    let checks = cert.recheck_with(r.ring(), &facts);
                    assert!(checks.iter().all(|c| c.holds), "{} {p} at {a}: {checks:?}", r.name);
                }
            }
        }
    }
}

#[test]
fn weakly_delta_qp_is_strongly_delta_r_clean_of_negation() {
    for r in catalog() {
        for a in r.ring().elements() {
            let weak = element_property(&r.analysis, a, PropertyName::WeaklyDeltaQuasipolar).unwrap().is_some();
            let neg = r.ring().neg(a);
            let clean = element_property(&r.analysis, neg, PropertyName::StronglyDeltaRClean).unwrap().is_some();
            assert_eq!(weak, clean, "{} at {a}", r.name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_preserves_delta_quasipolarity(ring in 0..19usize, a in any::<prop::sample::Index>(), u in any::<prop::sample::Index>()) {
        let r = &catalog()[ring];
        let an = &r.analysis;
        let a = a.index(an.order());
        let units = an.units.to_vec();
        let u = units[u.index(units.len())];
        let inv = an.inverses[u].unwrap();
        let ring = an.ring();
        let conj = ring.mul(ring.mul(inv, a), u);
        prop_assert_eq!(delta_qp(an, a), delta_qp(an, conj));
    }

    #[test]
    fn negation_duality_swaps_spectral_idempotents(ring in 0..19usize, a in any::<prop::sample::Index>()) {
        let an = &catalog()[ring].analysis;
        let r = an.ring();
        let a = a.index(an.order());
        let dual = r.sub(r.neg(r.one()), a);
        let ps = spectral_candidates(an, a, SpectralFlavor::Delta);
        let qs = spectral_candidates(an, dual, SpectralFlavor::Delta);
        prop_assert_eq!(ps.is_empty(), qs.is_empty());
        for p in ps {
            prop_assert!(qs.contains(&r.sub(r.one(), p)));
        }
    }

    #[test]
    fn product_order_does_not_change_verdicts(i in 0..SMALL.len(), j in 0..SMALL.len()) {
        let limits = Limits::default();
        let (a, b) = (small(i), small(j));
        let ab = Analysis::new(build_product(&[a.clone(), b.clone()], &limits).unwrap(), &limits).unwrap();
        let ba = Analysis::new(build_product(&[b.clone(), a.clone()], &limits).unwrap(), &limits).unwrap();
        let swap = |x: usize| {
            let d = decode_mixed(x, &[a.order(), b.order()]);
            d[1] * a.order() + d[0]
        };
        let swapped = ElementSet::from_indices(ba.order(), ab.delta_set().iter().map(swap));
        prop_assert_eq!(&swapped, ba.delta_set());
        for p in PropertyName::ALL {
            prop_assert_eq!(
                ringlab::ring_property(&ab, p).unwrap().holds,
                ringlab::ring_property(&ba, p).unwrap().holds,
                "{}", p
            );
        }
    }

    #[test]
    fn quotient_projection_is_a_ring_homomorphism(i in 0..SMALL.len(), g in any::<prop::sample::Index>()) {
        let ring = small(i);
        let g = g.index(ring.order());
        let ideal = two_sided_closure(&ring, &ElementSet::singleton(ring.order(), g));
        let q = build_quotient(&ring, &ideal).unwrap();
        prop_assert!(verify_axioms(&q.ring).is_empty());
        prop_assert_eq!(q.ring.order() * ideal.len(), ring.order());
        let pi = &q.projection;
        prop_assert_eq!(pi[ring.one()], q.ring.one());
        for x in ring.elements() {
            prop_assert_eq!(pi[x] == pi[ring.zero()], ideal.contains(x));
            for y in ring.elements() {
                prop_assert_eq!(pi[ring.add(x, y)], q.ring.add(pi[x], pi[y]));
                prop_assert_eq!(pi[ring.mul(x, y)], q.ring.mul(pi[x], pi[y]));
            }
        }
    }

    #[test]
    fn essential_right_ideals_are_closed_under_intersection(ring in 0..19usize, x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let r = catalog()[ring].ring();
        let lattice = RightIdealLattice::new(r, &Limits::default()).unwrap();
        let i = &lattice.ideals[x.index(lattice.ideals.len())];
        let k = &lattice.ideals[y.index(lattice.ideals.len())];
        if is_essential(r, i).unwrap() && is_essential(r, k).unwrap() {
            prop_assert!(is_essential(r, &i.intersection(k)).unwrap());
        }
    }

    #[test]
    fn jacobson_lies_in_delta_and_two_is_in_delta_for_delta_qp_rings(ring in 0..19usize) {
        let r = &catalog()[ring];
        let an = &r.analysis;
        prop_assert!(an.jacobson.is_subset(an.delta_set()));
        if r.has(PropertyName::DeltaQuasipolar) {
            let two = an.ring().add(an.ring().one(), an.ring().one());
            prop_assert!(an.delta_set().contains(two));
        }
    }
}
