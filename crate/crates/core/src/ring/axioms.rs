use std::fmt;

use serde::Serialize;

use super::FiniteRing;
use crate::set::ElementSet;

/// A failed ring axiom together with the elements that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

/// Checks every ring axiom; the result is empty iff the tables define a unital ring.
///
/// Reports at most one witness per axiom. Associativity of `+` uses Light's test
/// over a generating set `S` of `(R, +)`; once `(R, +)` is a group, both
/// distributive laws and multiplicative associativity are additive in one argument
/// and are checked with that argument ranging over `S`. A reduced check is only
/// relied upon after the axioms it depends on passed, so a nonempty result is
/// never hidden.
pub fn verify_axioms(ring: &FiniteRing) -> Vec<Violation> {
    let n = ring.order();
    let mut out = Vec::new();
    let mut fail = |axiom: &'static str, witness: Vec<usize>| out.push(Violation { axiom, witness });

    let zero = ring.zero();
    if let Some(a) = ring.elements().find(|&a| ring.add(zero, a) != a || ring.add(a, zero) != a) {
        fail("additive identity", vec![a]);
    }
    if let Some((a, b)) = pairs(n).find(|&(a, b)| ring.add(a, b) != ring.add(b, a)) {
        fail("additive commutativity", vec![a, b]);
    }
    if let Some(a) = ring.elements().find(|&a| !ring.elements().any(|b| ring.add(a, b) == zero)) {
        fail("additive inverse", vec![a]);
    }
    let gens = additive_generators(ring);
    if let Some(w) = triples(n, &gens).find(|&(x, s, y)| ring.add(ring.add(x, s), y) != ring.add(x, ring.add(s, y))) {
        fail("additive associativity", vec![w.0, w.1, w.2]);
    }
    if let Some(w) = triples(n, &gens)
        .map(|(a, s, b)| (a, b, s))
        .find(|&(a, b, s)| ring.mul(a, ring.add(b, s)) != ring.add(ring.mul(a, b), ring.mul(a, s)))
    {
        fail("left distributivity", vec![w.0, w.1, w.2]);
    }
    if let Some(w) = triples(n, &gens)
        .map(|(a, s, b)| (b, s, a))
        .find(|&(b, s, a)| ring.mul(ring.add(b, s), a) != ring.add(ring.mul(b, a), ring.mul(s, a)))
    {
        fail("right distributivity", vec![w.0, w.1, w.2]);
    }
    let one = ring.one();
    if let Some(a) = ring.elements().find(|&a| ring.mul(one, a) != a || ring.mul(a, one) != a) {
        fail("multiplicative identity", vec![a]);
    }
    if let Some(w) = triples(n, &gens).find(|&(a, s, c)| ring.mul(ring.mul(a, s), c) != ring.mul(a, ring.mul(s, c))) {
        fail("multiplicative associativity", vec![w.0, w.1, w.2]);
    }
    out
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize, middle: &[usize]) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    (0..n).flat_map(move |x| middle.iter().flat_map(move |&s| (0..n).map(move |y| (x, s, y))))
}

/// Greedy generating set of `(R, +)` as a magma: repeatedly adjoin the least element
/// not yet reached and close under `+`.
fn additive_generators(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.order();
    let mut reached = ElementSet::empty(n);
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for candidate in ring.elements() {
        if reached.contains(candidate) {
            continue;
        }
        gens.push(candidate);
        let mut queue = vec![candidate];
        while let Some(x) = queue.pop() {
            if !reached.insert(x) {
                continue;
            }
            members.push(x);
            for &y in members.iter() {
                for z in [ring.add(x, y), ring.add(y, x)] {
                    if !reached.contains(z) {
                        queue.push(z);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_dorroh, build_upper_triangular, build_zmod, DorrohData, Limits};
    use proptest::prelude::*;

    /// Direct check of every axiom over all triples.
    fn brute_force_ok(ring: &FiniteRing) -> bool {
        let n = ring.order();
        let e = 0..n;
        let zero = ring.zero();
        let one = ring.one();
        e.clone().all(|a| ring.add(zero, a) == a && ring.mul(one, a) == a && ring.mul(a, one) == a)
            && e.clone().all(|a| e.clone().any(|b| ring.add(a, b) == zero))
            && e.clone().all(|a| {
                e.clone().all(|b| {
                    ring.add(a, b) == ring.add(b, a)
                        && e.clone().all(|c| {
                            ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
                                && ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
                                && ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
                                && ring.mul(ring.add(b, c), a) == ring.add(ring.mul(b, a), ring.mul(c, a))
                        })
                })
            })
    }

    #[test]
    fn constructed_rings_pass() {
        let limits = Limits::default();
        let z6 = build_zmod(6, &limits).unwrap();
        assert!(verify_axioms(&z6).is_empty());
        let z2 = build_zmod(2, &limits).unwrap();
        let data = DorrohData::integer_action(z2.clone(), z2.clone()).unwrap();
        let d = build_dorroh(&data, &limits).unwrap();
        assert!(verify_axioms(&d).is_empty());
    }

    #[test]
    fn corrupted_product_detected() {
        let z4 = build_zmod(4, &Limits::default()).unwrap();
        let mut mul = z4.mul_table();
        mul[2][2] = 1;
        let bad = FiniteRing::from_tables("bad", &z4.add_table(), &mul, 0, 1, None).unwrap();
        let violations = verify_axioms(&bad);
        assert!(!violations.is_empty());
        assert!(violations
            .iter()
            .any(|v| v.axiom.contains("distributivity") || v.axiom.contains("associativity")));
        assert!(FiniteRing::new_checked("bad", &z4.add_table(), &mul, 0, 1, None).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn reduced_check_matches_brute_force(
            which in 0usize..3,
            table in 0usize..2,
            i in 0usize..8, j in 0usize..8, v in 0usize..8,
        ) {
            let limits = Limits::default();
            let ring = match which {
                0 => build_zmod(6, &limits).unwrap(),
                1 => build_zmod(8, &limits).unwrap(),
                _ => build_upper_triangular(&build_zmod(2, &limits).unwrap(), 2, &limits).unwrap(),
            };
            let n = ring.order();
            let (i, j, v) = (i % n, j % n, v % n);
            let mut add = ring.add_table();
            let mut mul = ring.mul_table();
            if table == 0 { add[i][j] = v } else { mul[i][j] = v }
            let corrupted = FiniteRing::from_tables("c", &add, &mul, ring.zero(), ring.one(), None).unwrap();
            prop_assert_eq!(verify_axioms(&corrupted).is_empty(), brute_force_ok(&corrupted));
        }
    }
}
