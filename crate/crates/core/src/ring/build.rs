use super::{decode_mixed, encode_mixed, FiniteRing, Limits};
use crate::error::{Error, Result};
use crate::ideals::is_two_sided_ideal;
use crate::set::ElementSet;

/// ℤ/nℤ with element `i` at index `i`.
pub fn build_zmod(n: usize, limits: &Limits) -> Result<FiniteRing> {
    let n = limits.check_order(n as u128)?;
    Ok(FiniteRing::from_fn(
        format!("Z{n}"),
        n,
        0,
        1 % n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        None,
    ))
}

/// Direct product; element index is the mixed-radix code of the components,
/// last factor fastest.
pub fn build_product(factors: &[FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::Malformed("direct product of an empty list".into()));
    }
    let order = factors.iter().try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128));
    let order = limits.check_order(order.unwrap_or(u128::MAX))?;
    let radices: Vec<usize> = factors.iter().map(FiniteRing::order).collect();
    let digits: Vec<Vec<usize>> = (0..order).map(|i| decode_mixed(i, &radices)).collect();
    let combine = |a: usize, b: usize, op: fn(&FiniteRing, usize, usize) -> usize| {
        let out: Vec<usize> = factors
            .iter()
            .zip(digits[a].iter().zip(&digits[b]))
            .map(|(f, (&x, &y))| op(f, x, y))
            .collect();
        encode_mixed(&out, &radices)
    };
    let zero = encode_mixed(&factors.iter().map(FiniteRing::zero).collect::<Vec<_>>(), &radices);
    let one = encode_mixed(&factors.iter().map(FiniteRing::one).collect::<Vec<_>>(), &radices);
    let labels = digits
        .iter()
        .map(|d| {
            let parts: Vec<String> = factors.iter().zip(d).map(|(f, &x)| f.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = factors.iter().map(|f| f.name().to_string()).collect::<Vec<_>>().join(" x ");
    Ok(FiniteRing::from_fn(
        name,
        order,
        zero,
        one,
        |a, b| combine(a, b, FiniteRing::add),
        |a, b| combine(a, b, FiniteRing::mul),
        Some(labels),
    ))
}

/// Which entries of a `k × k` matrix are stored.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Full,
    Upper,
    ConstantDiagonal,
}

impl Shape {
    fn positions(self, k: usize) -> Vec<(usize, usize)> {
        match self {
            Shape::Full => (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect(),
            Shape::Upper => (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect(),
            Shape::ConstantDiagonal => std::iter::once((0, 0))
                .chain((0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
                .collect(),
        }
    }
}

fn matrix_family(base: &FiniteRing, k: usize, shape: Shape, name: String, limits: &Limits) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::Malformed("matrix size must be at least 1".into()));
    }
    let positions = shape.positions(k);
    let radix = base.order();
    let order = (radix as u128).checked_pow(positions.len() as u32).unwrap_or(u128::MAX);
    let order = limits.check_order(order)?;
    let radices = vec![radix; positions.len()];

    let to_matrix = |index: usize| -> Vec<usize> {
        let digits = decode_mixed(index, &radices);
        let mut m = vec![base.zero(); k * k];
        for (&(i, j), &d) in positions.iter().zip(&digits) {
            m[i * k + j] = d;
        }
        if shape == Shape::ConstantDiagonal {
            for i in 1..k {
                m[i * k + i] = digits[0];
            }
        }
        m
    };
    let matrices: Vec<Vec<usize>> = (0..order).map(to_matrix).collect();
    let from_matrix = |m: &[usize]| -> usize {
        let digits: Vec<usize> = positions.iter().map(|&(i, j)| m[i * k + j]).collect();
        encode_mixed(&digits, &radices)
    };
    let add = |a: usize, b: usize| {
        let m: Vec<usize> = matrices[a].iter().zip(&matrices[b]).map(|(&x, &y)| base.add(x, y)).collect();
        from_matrix(&m)
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (&matrices[a], &matrices[b]);
        let mut m = vec![base.zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                m[i * k + j] = (0..k).fold(base.zero(), |acc, l| base.add(acc, base.mul(x[i * k + l], y[l * k + j])));
            }
        }
        from_matrix(&m)
    };
    let mut identity = vec![base.zero(); k * k];
    for i in 0..k {
        identity[i * k + i] = base.one();
    }
    let labels = matrices
        .iter()
        .map(|m| {
            let rows: Vec<String> = (0..k)
                .map(|i| (0..k).map(|j| base.label(m[i * k + j])).collect::<Vec<_>>().join(" "))
                .collect();
            format!("[{}]", rows.join("; "))
        })
        .collect();
    Ok(FiniteRing::from_fn(name, order, 0, from_matrix(&identity), add, mul, Some(labels)))
}

/// `Mat_k(R)`, entries row-major in base `|R|`.
pub fn build_matrix_ring(base: &FiniteRing, k: usize, limits: &Limits) -> Result<FiniteRing> {
    matrix_family(base, k, Shape::Full, format!("Mat{k}({})", base.name()), limits)
}

/// `T_k(R)`, the upper triangular entries row-major in base `|R|`.
pub fn build_upper_triangular(base: &FiniteRing, k: usize, limits: &Limits) -> Result<FiniteRing> {
    matrix_family(base, k, Shape::Upper, format!("T{k}({})", base.name()), limits)
}

/// Upper triangular matrices with all diagonal entries equal; the diagonal value
/// is the leading digit, followed by the strictly upper entries row-major.
pub fn build_constant_diagonal_triangular(base: &FiniteRing, k: usize, limits: &Limits) -> Result<FiniteRing> {
    matrix_family(base, k, Shape::ConstantDiagonal, format!("CT{k}({})", base.name()), limits)
}

/// A quotient ring together with its canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// `projection[a]` is the coset containing `a`.
    pub projection: Vec<usize>,
    /// Least member of each coset.
    pub representatives: Vec<usize>,
}

/// `R / I` for a two-sided ideal `I`; cosets are ordered by their least member.
pub fn build_quotient(ring: &FiniteRing, ideal: &ElementSet) -> Result<Quotient> {
    if ideal.ring_order() != ring.order() || !is_two_sided_ideal(ring, ideal) {
        return Err(Error::NotTwoSidedIdeal(format!("{ideal:?}")));
    }
    let n = ring.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in ring.elements() {
        if projection[a] != usize::MAX {
            continue;
        }
        let coset = representatives.len();
        representatives.push(a);
        for i in ideal.iter() {
            projection[ring.add(a, i)] = coset;
        }
    }
    let reps = &representatives;
    let proj = &projection;
    let labels = reps.iter().map(|&r| format!("{}+I", ring.label(r))).collect();
    let quotient = FiniteRing::from_fn(
        format!("{}/I", ring.name()),
        reps.len(),
        proj[ring.zero()],
        proj[ring.one()],
        |a, b| proj[ring.add(reps[a], reps[b])],
        |a, b| proj[ring.mul(reps[a], reps[b])],
        Some(labels),
    );
    Ok(Quotient { ring: quotient, projection, representatives })
}
