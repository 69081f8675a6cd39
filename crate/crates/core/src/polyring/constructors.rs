//! Seeded and structured inputs: generic forms, pinched Veronese generators,
//! symmetric-determinant cubics and vanishing ideals of points.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::groebner;
use crate::scalars::{DenseMatrix, Field, FieldElem};
use crate::{Error, Result};

/// Coefficient bound for "generic" forms: coefficients are drawn uniformly
/// from `{-B..B} \ {0}`.
pub const GENERIC_COEFF_BOUND: i64 = 50;

/// Every seeded construction goes through this generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nonzero_coeff(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// Monomials of degree `d` in decreasing degrevlex order.
pub fn monomials_desc(n: usize, d: u32) -> Vec<Monomial> {
    let mut v = Monomial::all_of_degree(n, d);
    let o = TermOrder::degrevlex(n);
    v.sort_by(|a, b| o.cmp(b, a));
    v
}

/// Dense form of the given degree with coefficients in `{-B..B} \ {0}`,
/// `B = GENERIC_COEFF_BOUND`, drawn in decreasing degrevlex order of monomials.
pub fn generic_form(ring: &Arc<Ring>, degree: u32, seed: u64) -> Polynomial {
    let mut rng = seeded_rng(seed);
    generic_form_with(ring, degree, &mut rng, GENERIC_COEFF_BOUND)
}

pub fn generic_form_with(ring: &Arc<Ring>, degree: u32, rng: &mut impl Rng, bound: i64) -> Polynomial {
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        monomials_desc(ring.n(), degree)
            .into_iter()
            .map(|m| (m, f.from_i64(nonzero_coeff(rng, bound))))
            .collect::<Vec<_>>(),
    )
}

/// `count` generic forms of one degree from a single seeded stream.
pub fn generic_forms(ring: &Arc<Ring>, degree: u32, count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| generic_form_with(ring, degree, &mut rng, GENERIC_COEFF_BOUND))
        .collect()
}

/// Generators of the pinched Veronese `PV(n, d, s)`: degree-`d` monomials in
/// `n` variables with at most `s` nonzero exponents, decreasing in degrevlex.
pub fn pinched_veronese(n: usize, d: u32, s: usize) -> Result<Vec<Monomial>> {
    if s == 0 || s > n || d == 0 {
        return Err(Error::Invalid(format!("PV({n},{d},{s}) needs 1 <= s <= n and d >= 1")));
    }
    Ok(monomials_desc(n, d)
        .into_iter()
        .filter(|m| m.support().count() <= s)
        .collect())
}

/// `det [[x1,x2,x3],[x2,x4,x5],[x3,x5,x6]]` in a six-variable ring.
pub fn symmetric_det_cubic(ring: &Arc<Ring>) -> Result<Polynomial> {
    if ring.n() != 6 {
        return Err(Error::Invalid("the symmetric determinant cubic needs 6 variables".into()));
    }
    let x = |i: usize| Polynomial::var(ring, i - 1);
    let entries = [[x(1), x(2), x(3)], [x(2), x(4), x(5)], [x(3), x(5), x(6)]];
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        &(&entries[1][a] * &entries[2][b]) - &(&entries[1][c] * &entries[2][d])
    };
    let t0 = &entries[0][0] * &minor(1, 2, 2, 1);
    let t1 = &entries[0][1] * &minor(0, 2, 2, 0);
    let t2 = &entries[0][2] * &minor(0, 1, 1, 0);
    Ok(&(&t0 - &t1) + &t2)
}

/// A random invertible matrix with entries in `{-bound..bound}`.
pub fn random_invertible(field: Field, n: usize, rng: &mut impl Rng, bound: i64) -> DenseMatrix {
    loop {
        let rows: Vec<Vec<FieldElem>> = (0..n)
            .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = DenseMatrix::from_rows(field, n, rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// `count` points of `P^{n-1}` with integer coordinates in `{-bound..bound}`,
/// resampled until every subset of at most `n` of them is linearly independent
/// (general linear position).
pub fn generic_points(field: Field, n: usize, count: usize, seed: u64, bound: i64) -> Vec<Vec<FieldElem>> {
    let mut rng = seeded_rng(seed);
    let mut pts: Vec<Vec<i64>> = Vec::new();
    let mut guard = 0;
    while pts.len() < count {
        guard += 1;
        assert!(guard < 100_000, "no points in general position at this coordinate bound");
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        let mut candidate = pts.clone();
        candidate.push(p);
        if in_general_position(field, &candidate, n) {
            pts = candidate;
        }
    }
    pts.iter()
        .map(|p| p.iter().map(|&c| field.from_i64(c)).collect())
        .collect()
}

fn in_general_position(field: Field, pts: &[Vec<i64>], n: usize) -> bool {
    let last = pts.len() - 1;
    let k = n.min(pts.len());
    // only subsets containing the newest point need checking
    let mut ok = true;
    subsets(last, k - 1, &mut |subset| {
        let mut rows: Vec<&[i64]> = subset.iter().map(|&i| pts[i].as_slice()).collect();
        rows.push(&pts[last]);
        if DenseMatrix::from_i64(field, &rows).rank() < rows.len() {
            ok = false;
        }
    });
    ok
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f)
}

/// Linear forms vanishing at a point: a basis of the kernel of `p` as a functional.
pub fn point_ideal(ring: &Arc<Ring>, p: &[FieldElem]) -> Result<Ideal> {
    if p.len() != ring.n() {
        return Err(Error::Dimension(format!("point needs {} coordinates", ring.n())));
    }
    if p.iter().all(FieldElem::is_zero) {
        return Err(Error::Invalid("the zero vector is not a projective point".into()));
    }
    let row = DenseMatrix::from_rows(ring.field(), ring.n(), vec![p.to_vec()])?;
    let forms = row
        .kernel_basis()
        .iter()
        .map(|v| Polynomial::linear(ring, v))
        .collect();
    Ideal::new(ring, forms)
}

/// Homogeneous vanishing ideal of distinct projective points, as the
/// intersection of their linear primes, with minimal generators.
pub fn points_ideal(ring: &Arc<Ring>, points: &[Vec<FieldElem>]) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::Invalid("no points given".into()));
    }
    for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            if proportional(p, q) {
                return Err(Error::Invalid(format!("point {} repeats an earlier point", i + 1)));
            }
        }
    }
    let mut acc = point_ideal(ring, &points[0])?;
    for p in &points[1..] {
        acc = groebner::intersect(&acc, &point_ideal(ring, p)?)?;
    }
    acc.minimalized()
}

fn proportional(p: &[FieldElem], q: &[FieldElem]) -> bool {
    let field = p[0].field();
    let m = DenseMatrix::from_rows(field, p.len(), vec![p.to_vec(), q.to_vec()]).expect("same length");
    m.rank() < 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn q(n: usize) -> Arc<Ring> {
        Ring::new(n, Field::Rational).unwrap()
    }

    #[test]
    fn pinched_veronese_counts() {
        let pv = pinched_veronese(3, 3, 2).unwrap();
        assert_eq!(pv.len(), 9);
        assert!(!pv.contains(&Monomial::from_exps(vec![1, 1, 1])));
        assert_eq!(pinched_veronese(4, 3, 4).unwrap().len(), 20);
        // 4 pure powers + C(4,2) pairs * 4 splits of 5 into two positive parts
        assert_eq!(pinched_veronese(4, 5, 2).unwrap().len(), 4 + 6 * 4);
        assert!(pinched_veronese(3, 3, 0).is_err());
    }

    #[test]
    fn symmetric_determinant() {
        let r = q(6);
        let expect = parse_polynomial(
            &r,
            "x1*x4*x6 - x1*x5^2 - x2^2*x6 + 2*x2*x3*x5 - x3^2*x4",
        )
        .unwrap();
        assert_eq!(symmetric_det_cubic(&r).unwrap(), expect);
    }

    #[test]
    fn generic_forms_are_dense() {
        let r = q(1);
        let f = generic_form(&r, 2, 7);
        assert_eq!(f.num_terms(), 1);
        let r = q(3);
        let f = generic_form(&r, 3, 7);
        assert_eq!(f.num_terms(), 10);
        assert_eq!(f, generic_form(&r, 3, 7));
        assert!(f.terms().all(|(_, c)| c.to_i64().unwrap().abs() <= GENERIC_COEFF_BOUND));
    }

    #[test]
    fn small_point_ideals() {
        let r = Ring::with_names(vec!["x".into(), "y".into()], Field::Rational).unwrap();
        let f = Field::Rational;
        let one = points_ideal(&r, &[vec![f.one(), f.zero()]]).unwrap();
        assert_eq!(one.to_string(), "(y)");
        let two = points_ideal(&r, &[vec![f.one(), f.zero()], vec![f.zero(), f.one()]]).unwrap();
        assert_eq!(two.to_string(), "(x*y)");
        assert!(points_ideal(&r, &[vec![f.one(), f.one()], vec![f.from_i64(2), f.from_i64(2)]]).is_err());
    }

    #[test]
    fn four_general_points_in_the_plane() {
        let r = q(3);
        let pts = generic_points(Field::Rational, 3, 4, 11, 3);
        let i = points_ideal(&r, &pts).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert!(i.generators().iter().all(|g| g.degree() == Some(2)));
        for g in i.generators() {
            for p in &pts {
                assert!(g.eval(p).is_zero());
            }
        }
    }
}
