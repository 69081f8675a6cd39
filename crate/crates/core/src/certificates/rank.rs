use std::sync::Arc;

use rand::Rng;

use crate::groebner::QuotientRing;
use crate::invariants::{hilbert_series, krull_dim};
use crate::polyring::{seeded_rng, Ideal, Monomial, Polynomial, Ring};
use crate::scalars::{DenseMatrix, Field, FieldElem};
use crate::{Error, Property, Result, Verdict, Witness};

/// Numerators of the projective grid searched when `dim V ≤ 3`: primitive
/// integer vectors with entries in `{-GRID_BOUND..GRID_BOUND}`.
pub const GRID_BOUND: i64 = 7;

const SCREEN_PRIME: u64 = 2_147_483_647;

/// Rank of the symmetric Gram matrix of a quadric (`A_ii = c_{x_i^2}`,
/// `A_ij = c_{x_i x_j}/2`). Characteristic 2 is rejected.
pub fn quadric_rank(q: &Polynomial) -> Result<usize> {
    Ok(gram(q)?.rank())
}

fn gram(q: &Polynomial) -> Result<DenseMatrix> {
    let field = q.field();
    if field.characteristic() == 2 {
        return Err(Error::Invalid("quadric ranks need characteristic other than 2".into()));
    }
    if !q.is_zero() && (q.degree() != Some(2) || !q.is_homogeneous()) {
        return Err(Error::Invalid(format!("`{q}` is not a quadric")));
    }
    let n = q.ring().n();
    let half = field.from_i64(2).inv();
    let mut m = DenseMatrix::zeros(field, n, n);
    for (mono, c) in q.terms() {
        let vars: Vec<usize> = mono.support().collect();
        match vars[..] {
            [i] => m.set(i, i, c.clone()),
            [i, j] => {
                let h = c * &half;
                m.set(i, j, h.clone());
                m.set(j, i, h);
            }
            _ => unreachable!("quadric monomials have one or two variables"),
        }
    }
    Ok(m)
}

/// Result of screening a space of quadrics for members of rank at most 2.
#[derive(Clone, Debug)]
pub struct RankScreen {
    pub min_rank_found: Option<usize>,
    pub member: Option<Polynomial>,
    pub samples: usize,
    /// Whether the exhaustive grid over the coefficient space ran.
    pub grid_searched: bool,
    /// The 3×3 minors of the generic member cut out only the origin, so no
    /// nonzero member has rank ≤ 2 even over the algebraic closure.
    pub certified: bool,
    /// Degree from which the minors contain every form in the coefficients.
    pub certified_degree: Option<u32>,
}

impl RankScreen {
    pub fn verdict(&self) -> Verdict {
        let witness = Witness::QuadricMembers {
            min_rank_found: self.min_rank_found,
            member: self.member.as_ref().map(|m| m.to_string()),
            certified_degree: self.certified_degree,
        };
        let v = if self.min_rank_found.is_some_and(|r| r <= 2) {
            Verdict::no(Property::NoLowRankQuadric, witness)
        } else if self.certified {
            Verdict::yes(Property::NoLowRankQuadric, witness)
        } else {
            Verdict::undetermined(Property::NoLowRankQuadric, witness)
        };
        if self.grid_searched {
            v.with_note(format!("grid of numerators up to {GRID_BOUND} searched"))
        } else {
            v.with_note("randomized search only")
        }
    }
}

/// Smallest rank among sampled members of `span(basis)`, plus the exact test:
/// the ideal of 3×3 minors of `Σ t_k A_k` in `K[t]` is primary to `(t)` iff no
/// nonzero member has rank ≤ 2. The test runs modulo a large prime first; a
/// zero-dimensional answer there is sound over the rationals because the
/// rank-≤2 locus is projective and can only grow under reduction. Otherwise
/// it is repeated over the base field.
pub fn min_quadric_rank(basis: &[Polynomial], seed: u64, samples: usize) -> Result<RankScreen> {
    let Some(first) = basis.first() else {
        return Err(Error::Invalid("empty space of quadrics".into()));
    };
    let grams = basis.iter().map(gram).collect::<Result<Vec<_>>>()?;
    let field = first.field();
    let n = first.ring().n();
    let m = basis.len();
    let mut best: Option<(usize, Polynomial)> = None;
    let mut consider = |coeffs: &[i64]| {
        let member = combination(basis, &coeffs.iter().map(|&c| field.from_i64(c)).collect::<Vec<_>>());
        if member.is_zero() {
            return;
        }
        let r = quadric_rank(&member).expect("validated");
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, member));
        }
    };
    let mut rng = seeded_rng(seed);
    for _ in 0..samples {
        let c: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
        consider(&c);
    }
    for k in 0..m {
        let mut e = vec![0; m];
        e[k] = 1;
        consider(&e);
    }
    let grid_searched = m <= 3;
    if grid_searched {
        for c in grid(m) {
            consider(&c);
        }
    }
    let (certified, certified_degree) = if n < 3 {
        (false, None)
    } else {
        let small = match field {
            Field::Rational => Field::Prime(SCREEN_PRIME),
            f => f,
        };
        match minors_test(&grams, small)? {
            Some(d) => (true, Some(d)),
            None if small != field => match minors_test(&grams, field)? {
                Some(d) => (true, Some(d)),
                None => (false, None),
            },
            None => (false, None),
        }
    };
    let (min_rank_found, member) = match best {
        Some((r, p)) => (Some(r), Some(p)),
        None => (None, None),
    };
    Ok(RankScreen {
        min_rank_found,
        member,
        samples,
        grid_searched,
        certified,
        certified_degree,
    })
}

fn combination(basis: &[Polynomial], coeffs: &[FieldElem]) -> Polynomial {
    let mut out = Polynomial::zero(basis[0].ring());
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

/// Primitive integer vectors in `[-B, B]^m`, first nonzero entry positive.
fn grid(m: usize) -> Vec<Vec<i64>> {
    let width = (2 * GRID_BOUND + 1) as usize;
    let mut out = Vec::new();
    for code in 0..width.pow(m as u32) {
        let mut rest = code;
        let v: Vec<i64> = (0..m)
            .map(|_| {
                let d = (rest % width) as i64 - GRID_BOUND;
                rest /= width;
                d
            })
            .collect();
        let first = v.iter().find(|&&c| c != 0);
        let content = v.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
        if matches!(first, Some(&c) if c > 0) && content == 1 {
            out.push(v);
        }
    }
    out
}

/// `Some(d)` when the 3×3 minors of `Σ t_k A_k` over `field` define a
/// zero-dimensional ideal containing all forms of degree `d`; `None` when
/// they do not or when the matrices do not reduce into `field`.
fn minors_test(grams: &[DenseMatrix], field: Field) -> Result<Option<u32>> {
    let m = grams.len();
    let n = grams[0].rows();
    let ring: Arc<Ring> = Ring::new(m, field)?;
    let mut entries = vec![vec![Polynomial::zero(&ring); n]; n];
    for (k, a) in grams.iter().enumerate() {
        let t = Monomial::var(m, k);
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let c = a.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let c = match c.as_rational() {
                    Some(r) => match field.from_rational(r) {
                        Ok(c) => c,
                        Err(_) => return Ok(None),
                    },
                    None => c.clone(),
                };
                e.add_term(t.clone(), &c);
            }
        }
    }
    let mut minors = Vec::new();
    let triples = triples(n);
    for rows in &triples {
        for cols in &triples {
            if rows > cols {
                continue;
            }
            let e = |a: usize, b: usize| &entries[rows[a]][cols[b]];
            let d = &(&(e(0, 0) * &(&(e(1, 1) * e(2, 2)) - &(e(1, 2) * e(2, 1))))
                - &(e(0, 1) * &(&(e(1, 0) * e(2, 2)) - &(e(1, 2) * e(2, 0)))))
                + &(e(0, 2) * &(&(e(1, 0) * e(2, 1)) - &(e(1, 1) * e(2, 0))));
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    if minors.is_empty() {
        return Ok(None);
    }
    let ideal = Ideal::new(&ring, minors)?;
    if krull_dim(&ideal)? != 0 {
        return Ok(None);
    }
    let h = hilbert_series(&QuotientRing::new(&ideal)?, 0);
    Ok(Some(h.numerator().len() as u32))
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}
