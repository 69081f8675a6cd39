use std::sync::Arc;

use super::buchberger;
use crate::polyring::{GradedSlices, Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::scalars::Field;
use crate::{Error, Property, Result, Verdict, Witness};

fn finish(ideal: Ideal) -> Result<Ideal> {
    if ideal.is_homogeneous() {
        ideal.minimalized()
    } else {
        Ok(ideal)
    }
}

fn fresh_name(ring: &Ring, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// Generators of `I ∩ K[x_j : j ∉ vars]`, kept in the ring of `I`, read off
/// a Gröbner basis for the block order eliminating `vars`.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let n = ideal.ring().n();
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::Dimension(format!("variable index out of range for {n} variables")));
    }
    let order = TermOrder::elimination(n, vars)?;
    let gb = buchberger(ideal, &order, None)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0)))
        .cloned()
        .collect();
    Ideal::new(ideal.ring(), kept)
}

/// Eliminates the first `k` variables.
pub fn eliminate_first(ideal: &Ideal, k: usize) -> Result<Ideal> {
    eliminate(ideal, &(0..k).collect::<Vec<_>>())
}

/// `I ∩ J` as the elimination of `t` from `t·I + (1−t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.n();
    let t_name = fresh_name(ring, "_t");
    let big = ring.extend(&[t_name.as_str()])?;
    let pos: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&big, n);
    let one_minus_t = &Polynomial::from_i64(&big, 1) - &t;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&t * &g.embed(&big, &pos));
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.embed(&big, &pos));
    }
    let elim = eliminate(&Ideal::new(&big, gens)?, &[n])?;
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.restrict(ring, &pos).expect("free of t"))
        .collect();
    finish(Ideal::new(ring, gens)?)
}

/// `I : f`, from `I ∩ (f)` divided by `f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Invalid("colon by the zero polynomial".into()));
    }
    if f.ring() != i.ring() {
        return Err(Error::RingMismatch);
    }
    let principal = Ideal::new(i.ring(), vec![f.clone()])?;
    let meet = intersect(i, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.div_exact(f).expect("elements of (f) are divisible by f"))
        .collect();
    finish(Ideal::new(i.ring(), gens)?)
}

/// `I : J` as the intersection of `I : g` over the generators `g` of `J`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let c = colon(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| unit_ideal(i.ring())))
}

fn unit_ideal(ring: &Arc<Ring>) -> Ideal {
    Ideal::new(ring, vec![Polynomial::from_i64(ring, 1)]).expect("same ring")
}

/// Kernel of `K[t_1..t_m] → K[x_1..x_n]`, `t_i ↦ m_i`, by eliminating the
/// `x` variables from `(t_i − m_i)`. The result lives in a new ring with
/// variables `t1..tm` and is given by minimal generators.
pub fn toric_ideal(field: Field, monomials: &[Monomial]) -> Result<Ideal> {
    let Some(first) = monomials.first() else {
        return Err(Error::Invalid("no monomials given".into()));
    };
    let n = first.n();
    if monomials.iter().any(|m| m.n() != n || m.degree() != first.degree()) {
        return Err(Error::Invalid("toric monomials must share arity and degree".into()));
    }
    for (k, m) in monomials.iter().enumerate() {
        if monomials[..k].contains(m) {
            return Err(Error::Invalid(format!("monomial {} repeated", k + 1)));
        }
    }
    let m = monomials.len();
    let t_names: Vec<String> = (1..=m).map(|i| format!("t{i}")).collect();
    let target = Ring::with_names(t_names.clone(), field)?;
    let mut names = t_names;
    names.extend((1..=n).map(|i| format!("_x{i}")));
    let big = Ring::with_names(names, field)?;
    let x_pos: Vec<usize> = (m..m + n).collect();
    let gens = monomials
        .iter()
        .enumerate()
        .map(|(i, mono)| {
            let image = Polynomial::monomial(&big, mono.embed(m + n, &x_pos));
            &Polynomial::var(&big, i) - &image
        })
        .collect();
    let elim = eliminate(&Ideal::new(&big, gens)?, &x_pos)?;
    let t_pos: Vec<usize> = (0..m).collect();
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.restrict(&target, &t_pos).expect("free of x"))
        .collect();
    finish(Ideal::new(&target, gens)?)
}

/// Equality of ideals by comparing reduced degrevlex Gröbner bases.
pub fn ideals_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    let order = TermOrder::degrevlex(i.ring().n());
    Ok(buchberger(i, &order, None)?.elements() == buchberger(j, &order, None)?.elements())
}

pub fn ideal_contains(i: &Ideal, f: &Polynomial) -> Result<bool> {
    let gb = buchberger(i, &TermOrder::degrevlex(i.ring().n()), None)?;
    Ok(gb.contains(f))
}

/// All reduced basis elements have degree two.
pub fn is_quadratic_gb(gb: &super::GroebnerBasis) -> bool {
    gb.elements().iter().all(|g| g.degree() == Some(2))
}

/// Minimal generators of a homogeneous ideal, computed degreewise up to the
/// largest degree among the given generators (no minimal generator can live
/// above it).
pub fn minimal_generators(i: &Ideal) -> Result<Vec<Polynomial>> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let Some(top) = i.max_degree() else {
        return Ok(Vec::new());
    };
    Ok(GradedSlices::build(i, top)?.minimal_generators())
}

/// First minimal generator whose degree is not two, if any.
pub fn non_quadratic_generator(i: &Ideal) -> Result<Option<Polynomial>> {
    Ok(minimal_generators(i)?.into_iter().find(|g| g.degree() != Some(2)))
}

/// Every minimal generator has degree exactly two.
pub fn is_quadratic_ideal(i: &Ideal) -> Result<bool> {
    Ok(non_quadratic_generator(i)?.is_none())
}

/// Verdict on quadraticity: a minimal generator of another degree refutes it.
pub fn quadratic_verdict(i: &Ideal) -> Result<Verdict> {
    Ok(match non_quadratic_generator(i)? {
        Some(g) => Verdict::no(
            Property::Quadratic,
            Witness::NonQuadraticGenerator {
                degree: g.degree().unwrap_or(0),
                generator: g.to_string(),
            },
        ),
        None => Verdict::yes(Property::Quadratic, Witness::None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, MonomialBasis};
    use proptest::prelude::*;

    fn xy() -> Arc<Ring> {
        Ring::with_names(vec!["x".into(), "y".into()], Field::Rational).unwrap()
    }

    fn xyz() -> Arc<Ring> {
        Ring::with_names(vec!["x".into(), "y".into(), "z".into()], Field::Rational).unwrap()
    }

    fn ideal(r: &Arc<Ring>, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn intersections() {
        let r = xy();
        assert_eq!(intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap().to_string(), "(x*y)");
        assert_eq!(intersect(&ideal(&r, &["x"]), &ideal(&r, &["x"])).unwrap().to_string(), "(x)");
        let meet = intersect(&ideal(&r, &["x^2", "y"]), &ideal(&r, &["x"])).unwrap();
        assert!(ideals_equal(&meet, &ideal(&r, &["x^2", "x*y"])).unwrap());
    }

    #[test]
    fn colons() {
        let r = xy();
        let x = parse_polynomial(&r, "x").unwrap();
        assert_eq!(colon(&ideal(&r, &["x*y"]), &x).unwrap().to_string(), "(y)");
        let c = colon(&ideal(&r, &["x^2", "x*y"]), &x).unwrap();
        assert!(ideals_equal(&c, &ideal(&r, &["x", "y"])).unwrap());
        assert!(colon(&ideal(&r, &["x"]), &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn elimination_keeps_the_ring() {
        let r = xyz();
        let i = ideal(&r, &["x - y", "y - z^2"]);
        let e = eliminate_first(&i, 2).unwrap();
        assert!(e.is_zero());
        let e = eliminate(&i, &[1]).unwrap();
        assert_eq!(e.to_string(), "(z^2 - x)");
    }

    #[test]
    fn toric_examples() {
        let mono = |e: Vec<u16>| Monomial::from_exps(e);
        let t = toric_ideal(Field::Rational, &[mono(vec![2, 0]), mono(vec![1, 1]), mono(vec![0, 2])]).unwrap();
        assert_eq!(t.generators().len(), 1);
        assert_eq!(t.generators()[0].to_string(), "t2^2 - t1*t3");
        assert!(toric_ideal(Field::Rational, &[mono(vec![1, 1])]).unwrap().is_zero());
        assert!(toric_ideal(Field::Rational, &[mono(vec![1, 1]), mono(vec![1, 0])]).is_err());
    }

    #[test]
    fn quadratic_ideals() {
        let r = xyz();
        assert!(is_quadratic_ideal(&ideal(&r, &["x^2", "x*y", "y^2 - x*z", "y*z"])).unwrap());
        assert!(!is_quadratic_ideal(&ideal(&r, &["x^3"])).unwrap());
        // redundant cubic generator does not spoil quadraticity
        assert!(is_quadratic_ideal(&ideal(&r, &["x^2", "x^3 + x*y*z", "y*z"])).unwrap());
    }

    #[test]
    fn permuted_generators_give_identical_bases() {
        let r = xyz();
        let a = ideal(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]);
        let b = ideal(&r, &["y^2 - x*z", "x^2 - y*z", "x*y - z^2"]);
        let o = TermOrder::degrevlex(3);
        assert_eq!(buchberger(&a, &o, None).unwrap().elements(), buchberger(&b, &o, None).unwrap().elements());
    }

    fn small_ideal() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<u32>)> {
        (
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, 10), 1..=3),
            proptest::collection::vec(1u32..=3, 3),
        )
    }

    fn build(r: &Arc<Ring>, coeffs: &[Vec<i64>], degs: &[u32]) -> Ideal {
        let gens = coeffs
            .iter()
            .zip(degs)
            .map(|(c, &d)| {
                let mons = Monomial::all_of_degree(3, d);
                Polynomial::from_terms(r, mons.into_iter().zip(c.iter().map(|&v| Field::Rational.from_i64(v))))
            })
            .collect();
        Ideal::new(r, gens).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn membership_agrees_with_slices((coeffs, degs) in small_ideal()) {
            let r = xyz();
            let i = build(&r, &coeffs, &degs);
            let gb = buchberger(&i, &TermOrder::degrevlex(3), None).unwrap();
            prop_assert!(gb.satisfies_buchberger_criterion());
            prop_assert!(gb.is_reduced());
            let slices = GradedSlices::build(&i, 4).unwrap();
            for d in 0..=4 {
                for m in MonomialBasis::of_degree(3, d).monomials() {
                    let f = Polynomial::monomial(&r, m.clone());
                    prop_assert_eq!(gb.contains(&f), slices.contains(&f));
                }
            }
        }

        #[test]
        fn colon_agrees_with_slices((coeffs, degs) in small_ideal(), lin in proptest::collection::vec(-2i64..=2, 3)) {
            let r = xyz();
            let i = build(&r, &coeffs, &degs);
            let f = Polynomial::linear(&r, &lin.iter().map(|&v| Field::Rational.from_i64(v)).collect::<Vec<_>>());
            prop_assume!(!f.is_zero());
            let c = colon(&i, &f).unwrap();
            let ci = GradedSlices::build(&c, 3).unwrap();
            let ii = GradedSlices::build(&i, 4).unwrap();
            for d in 0..=3 {
                for m in MonomialBasis::of_degree(3, d).monomials() {
                    let g = Polynomial::monomial(&r, m.clone());
                    prop_assert_eq!(ci.contains(&g), ii.contains(&(&g * &f)));
                }
            }
        }
    }
}
