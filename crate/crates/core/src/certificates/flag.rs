use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use super::filtration::{FiltrationStep, KoszulFiltration};
use super::record::{FlagRecord, QuotientRecord};
use super::Lifter;
use crate::groebner::{is_quadratic_ideal, QuotientRing};
use crate::polyring::{parse_polynomial, seeded_rng, LinearSpace, Polynomial, Ring};
use crate::{Bounds, Error, Property, Result, Verdict, Witness};

pub const DEFAULT_FLAG_ATTEMPTS: usize = 500;

/// Candidates tried per extension step within one attempt.
const CANDIDATES_PER_STEP: usize = 24;

/// A complete flag `V_1 ⊂ … ⊂ V_n = R_1` with `V_i` spanned by the first `i`
/// forms, and `colon_map[i] = j` claiming `(V_i) : (V_{i+1}) = (V_j)`.
#[derive(Clone, Debug)]
pub struct GroebnerFlag {
    quotient: QuotientRing,
    forms: Vec<Polynomial>,
    colon_map: Vec<usize>,
}

impl GroebnerFlag {
    pub fn new(quotient: QuotientRing, forms: Vec<Polynomial>, colon_map: Vec<usize>) -> Result<Self> {
        if colon_map.len() != forms.len() {
            return Err(Error::Dimension(format!(
                "{} forms but {} colon indices",
                forms.len(),
                colon_map.len()
            )));
        }
        for f in &forms {
            if f.ring() != quotient.ring() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(GroebnerFlag {
            quotient,
            forms,
            colon_map,
        })
    }

    pub fn quotient(&self) -> &QuotientRing {
        &self.quotient
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn colon_map(&self) -> &[usize] {
        &self.colon_map
    }

    /// `V_i`; fails when the first `i` forms are not independent linear forms.
    pub fn space(&self, i: usize) -> Result<LinearSpace> {
        LinearSpace::new(self.quotient.ring(), self.forms[..i].to_vec())
    }

    pub fn record(&self) -> FlagRecord {
        FlagRecord {
            quotient: QuotientRecord::of(&self.quotient),
            forms: self.forms.iter().map(|f| f.to_string()).collect(),
            colon_map: self.colon_map.clone(),
        }
    }

    pub fn from_record(r: &FlagRecord) -> Result<Self> {
        let q = r.quotient.load()?;
        let forms = r
            .forms
            .iter()
            .map(|f| parse_polynomial(q.ring(), f))
            .collect::<Result<Vec<_>>>()?;
        GroebnerFlag::new(q, forms, r.colon_map.clone())
    }

    /// The flag as a Koszul filtration with members `V_0, …, V_n`.
    pub fn to_filtration(&self) -> Result<KoszulFiltration> {
        let n = self.forms.len();
        let members = (0..=n).map(|i| self.space(i)).collect::<Result<Vec<_>>>()?;
        let steps = std::iter::once(None)
            .chain((0..n).map(|i| {
                Some(FiltrationStep {
                    base: i,
                    form: self.forms[i].clone(),
                    colon: self.colon_map[i],
                })
            }))
            .collect();
        KoszulFiltration::new(self.quotient.clone(), members, steps)
    }
}

fn failure(member: usize, condition: &str) -> Verdict {
    Verdict::no(
        Property::GroebnerFlag,
        Witness::CertificateFailure {
            member,
            condition: condition.into(),
        },
    )
}

/// Checks nesting, dimensions and every colon identity. A pass certifies that
/// `R` is G-quadratic (and Koszul); a failure refutes only this flag.
pub fn verify_flag(flag: &GroebnerFlag) -> Result<Verdict> {
    let q = &flag.quotient;
    let n = q.n();
    if flag.forms.len() != n {
        return Ok(failure(0, "flag length differs from the number of variables"));
    }
    let Ok(top) = flag.space(n) else {
        return Ok(failure(0, "nesting and dimensions"));
    };
    if !top.same_span(&LinearSpace::full(q.ring())) {
        return Ok(failure(n, "nesting and dimensions"));
    }
    if flag.colon_map.iter().any(|&j| j > n) {
        return Ok(failure(0, "colon index out of range"));
    }
    let lifter = Lifter::new(q);
    for i in 0..n {
        let target = flag.space(flag.colon_map[i])?;
        if !lifter.colon_is(&flag.space(i)?, &flag.forms[i], &target)? {
            return Ok(failure(i + 1, "colon identity"));
        }
    }
    Ok(Verdict::yes(Property::GQuadratic, Witness::Flag(flag.record()))
        .with_note("a Groebner flag is a Koszul filtration, so R is also Koszul"))
}

/// Linear forms with coefficients in `{-2..2}` up to scalar multiples (first
/// nonzero coefficient positive, content one), sparsest and smallest first,
/// followed by `n` seeded forms with rational coefficients.
pub fn linear_form_pool(ring: &Arc<Ring>, seed: u64) -> Vec<Polynomial> {
    let n = ring.n();
    let field = ring.field();
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![-2i64; n];
    loop {
        let first = current.iter().find(|&&c| c != 0);
        let content = current.iter().fold(0i64, |g, &c| g.gcd(&c));
        if matches!(first, Some(&c) if c > 0) && content == 1 {
            vectors.push(current.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if current[k] < 2 {
                current[k] += 1;
                break;
            }
            current[k] = -2;
        }
        if current.iter().all(|&c| c == -2) {
            break;
        }
    }
    vectors.sort_by_key(|v| {
        (
            v.iter().filter(|&&c| c != 0).count(),
            v.iter().map(|c| c.abs()).max(),
            v.iter().map(|&c| -c.abs()).collect::<Vec<_>>(),
            v.clone(),
        )
    });
    let mut pool: Vec<Polynomial> = vectors
        .iter()
        .map(|v| Polynomial::linear(ring, &v.iter().map(|&c| field.from_i64(c)).collect::<Vec<_>>()))
        .collect();
    let mut rng = seeded_rng(seed ^ 0x5eed_f1a6);
    for _ in 0..n {
        let coeffs: Vec<_> = (0..n)
            .map(|_| {
                let r = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
                field.from_rational(&r).unwrap_or_else(|_| field.one())
            })
            .collect();
        let f = Polynomial::linear(ring, &coeffs);
        if !f.is_zero() {
            pool.push(f);
        }
    }
    pool
}

/// Outcome of a bounded flag search. `attempts` counts the attempts made,
/// including the successful one.
#[derive(Clone, Debug)]
pub struct FlagSearch {
    pub flag: Option<GroebnerFlag>,
    pub attempts: usize,
    pub colons_computed: usize,
}

/// Randomized greedy search for a Gröbner flag. Attempt 0 scans the pool in
/// order, later attempts in seeded shuffles. Each attempt extends `V_i` by a
/// candidate `x` when `(V_i) : x` is generated by a space `L` of linear forms
/// that either is already in the chain or contains `V_{i+1}`, in which case
/// `L` becomes a required later member. Requires a quadratic ideal.
pub fn search_flag(q: &QuotientRing, seed: u64, attempts: usize) -> Result<FlagSearch> {
    if !is_quadratic_ideal(q.ideal())? {
        return Ok(FlagSearch {
            flag: None,
            attempts: 0,
            colons_computed: 0,
        });
    }
    let pool = linear_form_pool(q.ring(), seed);
    let lifter = Lifter::new(q);
    let mut rng = seeded_rng(seed);
    let mut order: Vec<usize> = (0..pool.len()).collect();
    for attempt in 0..attempts {
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        if let Some((forms, map)) = attempt_flag(q, &pool, &order, &lifter)? {
            let flag = GroebnerFlag::new(q.clone(), forms, map)?;
            return Ok(FlagSearch {
                flag: Some(flag),
                attempts: attempt + 1,
                colons_computed: lifter.colons_computed(),
            });
        }
    }
    Ok(FlagSearch {
        flag: None,
        attempts,
        colons_computed: lifter.colons_computed(),
    })
}

fn attempt_flag(
    q: &QuotientRing,
    pool: &[Polynomial],
    order: &[usize],
    lifter: &Lifter,
) -> Result<Option<(Vec<Polynomial>, Vec<usize>)>> {
    let n = q.n();
    let mut chain: Vec<LinearSpace> = vec![LinearSpace::zero(q.ring())];
    let mut forms: Vec<Polynomial> = Vec::new();
    let mut map: Vec<usize> = Vec::new();
    // required[k] = the space V_k must equal
    let mut required: Vec<Option<LinearSpace>> = vec![None; n + 1];
    for i in 0..n {
        let current = chain[i].clone();
        let mut candidates: Vec<Polynomial> = Vec::new();
        for k in i + 1..=n {
            if let Some(l) = &required[k] {
                candidates.extend(l.basis().iter().cloned());
                break;
            }
        }
        candidates.extend(order.iter().map(|&k| pool[k].clone()));
        let mut tried = 0;
        let mut chosen = None;
        for x in candidates {
            if tried >= CANDIDATES_PER_STEP {
                break;
            }
            if current.contains(&x) {
                continue;
            }
            let next = current.extended(x.clone())?;
            if (i + 1..=n).any(|k| required[k].as_ref().is_some_and(|l| !next.is_subspace_of(l))) {
                continue;
            }
            if required[i + 1].as_ref().is_some_and(|l| !l.same_span(&next)) {
                continue;
            }
            tried += 1;
            let Some(l) = lifter.linear_colon(&current, &x)? else {
                continue;
            };
            let j = l.dim();
            if j <= i + 1 {
                let known = if j == i + 1 { &next } else { &chain[j] };
                if l.same_span(known) {
                    chosen = Some((x, next, j, None));
                    break;
                }
                continue;
            }
            if !next.is_subspace_of(&l) {
                continue;
            }
            let consistent = (i + 2..=n).all(|k| match &required[k] {
                None => true,
                Some(m) if k == j => m.same_span(&l),
                Some(m) if k < j => m.is_subspace_of(&l),
                Some(m) => l.is_subspace_of(m),
            });
            if consistent {
                chosen = Some((x, next, j, Some(l)));
                break;
            }
        }
        let Some((x, next, j, req)) = chosen else {
            return Ok(None);
        };
        if let Some(l) = req {
            required[j] = Some(l);
        }
        forms.push(x);
        chain.push(next);
        map.push(j);
    }
    Ok(Some((forms, map)))
}

/// Search plus verification as a verdict on G-quadraticity.
pub fn search_flag_verdict(q: &QuotientRing, seed: u64, attempts: usize) -> Result<Verdict> {
    let bounds = Bounds {
        attempts: Some(attempts),
        seed: Some(seed),
        ..Bounds::default()
    };
    let search = search_flag(q, seed, attempts)?;
    match &search.flag {
        Some(flag) => Ok(verify_flag(flag)?
            .with_bounds(bounds)
            .with_note(format!("found in attempt {}", search.attempts))),
        None => Ok(Verdict::undetermined(
            Property::GQuadratic,
            Witness::SearchExhausted {
                attempts: search.attempts,
            },
        )
        .with_bounds(bounds)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::verify_filtration;
    use crate::polyring::{generic_points, points_ideal, Ideal};
    use crate::scalars::Field;
    use crate::Outcome;

    fn quotient(names: &[&str], gens: &[&str]) -> QuotientRing {
        let r = Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap();
        QuotientRing::new(&Ideal::parse(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn polynomial_ring_flag() {
        let q = quotient(&["x", "y"], &[]);
        let r = q.ring().clone();
        let flag = GroebnerFlag::new(q, vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)], vec![0, 1]).unwrap();
        let v = verify_flag(&flag).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedYes);
        assert_eq!(v.property, Property::GQuadratic);
        assert!(verify_filtration(&flag.to_filtration().unwrap()).unwrap().is_yes());
    }

    #[test]
    fn wrong_colon_index_fails() {
        let q = quotient(&["x", "y"], &[]);
        let r = q.ring().clone();
        let flag = GroebnerFlag::new(q, vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)], vec![1, 1]).unwrap();
        let v = verify_flag(&flag).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedNo);
        assert_eq!(
            v.witness,
            Witness::CertificateFailure { member: 1, condition: "colon identity".into() }
        );
    }

    #[test]
    fn pool_is_deduplicated_up_to_scalars() {
        let r = Ring::new(2, Field::Rational).unwrap();
        let pool = linear_form_pool(&r, 0);
        // x1, x2, x1 ± x2, x1 ± 2*x2, 2*x1 ± x2, then two seeded forms
        assert_eq!(pool.len(), 8 + 2);
        assert_eq!(pool[0].to_string(), "x1");
        assert_eq!(pool[1].to_string(), "x2");
    }

    #[test]
    fn no_flag_algebra_exhausts() {
        let q = quotient(&["x", "y", "z"], &["x^2", "y^2", "x*z", "y*z"]);
        let s = search_flag(&q, 7, 40).unwrap();
        assert!(s.flag.is_none());
        assert_eq!(s.attempts, 40);
    }

    #[test]
    fn four_points_in_the_plane() {
        let r = Ring::new(3, Field::Rational).unwrap();
        let pts = generic_points(Field::Rational, 3, 4, 11, 1);
        let q = QuotientRing::new(&points_ideal(&r, &pts).unwrap()).unwrap();
        let s = search_flag(&q, 3, 200).unwrap();
        let flag = s.flag.expect("a flag exists for four points in general position");
        assert!(verify_flag(&flag).unwrap().is_yes());
        assert!(verify_filtration(&flag.to_filtration().unwrap()).unwrap().is_yes());
        let back = GroebnerFlag::from_record(&flag.record()).unwrap();
        assert_eq!(back.record(), flag.record());
    }

    #[test]
    fn searches_are_deterministic() {
        let r = Ring::new(3, Field::Rational).unwrap();
        let pts = generic_points(Field::Rational, 3, 4, 5, 1);
        let q = QuotientRing::new(&points_ideal(&r, &pts).unwrap()).unwrap();
        let a = search_flag(&q, 9, 100).unwrap();
        let b = search_flag(&q, 9, 100).unwrap();
        assert_eq!(a.attempts, b.attempts);
        assert_eq!(a.flag.map(|f| f.record()), b.flag.map(|f| f.record()));
    }
}
