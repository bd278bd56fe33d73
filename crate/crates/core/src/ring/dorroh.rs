use super::{FiniteRing, Limits};
use crate::error::{Error, Result};

/// Input for a Dorroh extension `D(R, V)`: a ring `R`, a ring `V` that is also an
/// `(R, R)`-bimodule, and the two action tables.
#[derive(Debug, Clone)]
pub struct DorrohData {
    pub base: FiniteRing,
    pub bimodule: FiniteRing,
    /// `left_action[r][v] = r·v`
    pub left_action: Vec<Vec<usize>>,
    /// `right_action[v][r] = v·r`
    pub right_action: Vec<Vec<usize>>,
}

impl DorrohData {
    /// Actions through the additive structure: `r·v = v·r = k·v` where `r = k·1`.
    ///
    /// Needs `R` to be additively generated by its identity (so `R ≅ ℤ_n`), unless
    /// `V` is the zero ring, in which case every action is zero.
    pub fn integer_action(base: FiniteRing, bimodule: FiniteRing) -> Result<Self> {
        let (nr, nv) = (base.order(), bimodule.order());
        let multiplier: Vec<usize> = if bimodule.is_trivial() {
            vec![0; nr]
        } else {
            let mut k_of = vec![usize::MAX; nr];
            let mut x = base.zero();
            for k in 0..nr {
                if k_of[x] != usize::MAX {
                    break;
                }
                k_of[x] = k;
                x = base.add(x, base.one());
            }
            if k_of.contains(&usize::MAX) {
                return Err(Error::Malformed(format!(
                    "{} is not additively generated by 1; supply action tables explicitly",
                    base.name()
                )));
            }
            k_of
        };
        let left_action: Vec<Vec<usize>> =
            (0..nr).map(|r| (0..nv).map(|v| bimodule.times(multiplier[r], v)).collect()).collect();
        let right_action = (0..nv).map(|v| (0..nr).map(|r| left_action[r][v]).collect()).collect();
        Ok(DorrohData { base, bimodule, left_action, right_action })
    }

    #[inline]
    fn left(&self, r: usize, v: usize) -> usize {
        self.left_action[r][v]
    }

    #[inline]
    fn right(&self, v: usize, r: usize) -> usize {
        self.right_action[v][r]
    }

    /// Checks table shapes, the bimodule laws and the three compatibility laws
    /// `(vw)r = v(wr)`, `(vr)w = v(rw)`, `(rv)w = r(vw)`.
    pub fn validate(&self) -> Result<()> {
        let (r_ring, v_ring) = (&self.base, &self.bimodule);
        let (nr, nv) = (r_ring.order(), v_ring.order());
        let shape_ok = self.left_action.len() == nr
            && self.left_action.iter().all(|row| row.len() == nv && row.iter().all(|&x| x < nv))
            && self.right_action.len() == nv
            && self.right_action.iter().all(|row| row.len() == nr && row.iter().all(|&x| x < nv));
        if !shape_ok {
            return Err(Error::Malformed("action tables have the wrong shape or range".into()));
        }
        let fail = |axiom: &'static str, witness: Vec<usize>| Err(Error::Bimodule { axiom, witness });
        let one = r_ring.one();
        for v in 0..nv {
            if self.left(one, v) != v {
                return fail("1·v = v", vec![v]);
            }
            if self.right(v, one) != v {
                return fail("v·1 = v", vec![v]);
            }
        }
        for r in 0..nr {
            for s in 0..nr {
                for v in 0..nv {
                    if self.left(r_ring.add(r, s), v) != v_ring.add(self.left(r, v), self.left(s, v)) {
                        return fail("(r+s)v = rv+sv", vec![r, s, v]);
                    }
                    if self.right(v, r_ring.add(r, s)) != v_ring.add(self.right(v, r), self.right(v, s)) {
                        return fail("v(r+s) = vr+vs", vec![v, r, s]);
                    }
                    if self.left(r_ring.mul(r, s), v) != self.left(r, self.left(s, v)) {
                        return fail("(rs)v = r(sv)", vec![r, s, v]);
                    }
                    if self.right(v, r_ring.mul(r, s)) != self.right(self.right(v, r), s) {
                        return fail("v(rs) = (vr)s", vec![v, r, s]);
                    }
                    if self.right(self.left(r, v), s) != self.left(r, self.right(v, s)) {
                        return fail("(rv)s = r(vs)", vec![r, v, s]);
                    }
                }
            }
        }
        for r in 0..nr {
            for v in 0..nv {
                for w in 0..nv {
                    if self.left(r, v_ring.add(v, w)) != v_ring.add(self.left(r, v), self.left(r, w)) {
                        return fail("r(v+w) = rv+rw", vec![r, v, w]);
                    }
                    if self.right(v_ring.add(v, w), r) != v_ring.add(self.right(v, r), self.right(w, r)) {
                        return fail("(v+w)r = vr+wr", vec![v, w, r]);
                    }
                    if self.right(v_ring.mul(v, w), r) != v_ring.mul(v, self.right(w, r)) {
                        return fail("(vw)r = v(wr)", vec![v, w, r]);
                    }
                    if v_ring.mul(self.right(v, r), w) != v_ring.mul(v, self.left(r, w)) {
                        return fail("(vr)w = v(rw)", vec![v, r, w]);
                    }
                    if v_ring.mul(self.left(r, v), w) != self.left(r, v_ring.mul(v, w)) {
                        return fail("(rv)w = r(vw)", vec![r, v, w]);
                    }
                }
            }
        }
        Ok(())
    }
}

/// `D(R, V)` on pairs `(r, v)` stored at `r·|V| + v`, with
/// `(r, v)(s, w) = (rs, rw + vs + vw)` and identity `(1, 0)`.
pub fn build_dorroh(data: &DorrohData, limits: &Limits) -> Result<FiniteRing> {
    data.validate()?;
    let (r_ring, v_ring) = (&data.base, &data.bimodule);
    let nv = v_ring.order();
    let order = limits.check_order(r_ring.order() as u128 * nv as u128)?;
    let split = |x: usize| (x / nv, x % nv);
    let join = |r: usize, v: usize| r * nv + v;
    let add = |a: usize, b: usize| {
        let ((r, v), (s, w)) = (split(a), split(b));
        join(r_ring.add(r, s), v_ring.add(v, w))
    };
    let mul = |a: usize, b: usize| {
        let ((r, v), (s, w)) = (split(a), split(b));
        let tail = v_ring.add(v_ring.add(data.left(r, w), data.right(v, s)), v_ring.mul(v, w));
        join(r_ring.mul(r, s), tail)
    };
    let labels = (0..order)
        .map(|x| {
            let (r, v) = split(x);
            format!("({},{})", r_ring.label(r), v_ring.label(v))
        })
        .collect();
    Ok(FiniteRing::from_fn(
        format!("D({},{})", r_ring.name(), v_ring.name()),
        order,
        join(r_ring.zero(), v_ring.zero()),
        join(r_ring.one(), v_ring.zero()),
        add,
        mul,
        Some(labels),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_zmod;

    #[test]
    fn zero_bimodule_gives_base_tables() {
        let limits = Limits::default();
        let z4 = build_zmod(4, &limits).unwrap();
        let zero = build_zmod(1, &limits).unwrap();
        let d = build_dorroh(&DorrohData::integer_action(z4.clone(), zero).unwrap(), &limits).unwrap();
        assert_eq!(d.add_table(), z4.add_table());
        assert_eq!(d.mul_table(), z4.mul_table());
        assert_eq!(d.one(), z4.one());
    }

    #[test]
    fn bad_action_reports_witness() {
        let limits = Limits::default();
        let z2 = build_zmod(2, &limits).unwrap();
        let mut data = DorrohData::integer_action(z2.clone(), z2).unwrap();
        data.left_action[1][1] = 0;
        match build_dorroh(&data, &limits) {
            Err(Error::Bimodule { axiom, witness }) => {
                assert_eq!(axiom, "1·v = v");
                assert_eq!(witness, vec![1]);
            }
            other => panic!("expected bimodule error, got {other:?}"),
        }
    }

    #[test]
    fn integer_action_requires_cyclic_base() {
        let limits = Limits::default();
        let z2 = build_zmod(2, &limits).unwrap();
        let klein = crate::ring::build_product(&[z2.clone(), z2.clone()], &limits).unwrap();
        assert!(DorrohData::integer_action(klein, z2).is_err());
    }

    #[test]
    fn z3_acting_on_z2_is_not_a_bimodule() {
        let limits = Limits::default();
        let data = DorrohData::integer_action(build_zmod(3, &limits).unwrap(), build_zmod(2, &limits).unwrap()).unwrap();
        assert!(matches!(data.validate(), Err(Error::Bimodule { .. })));
    }
}
