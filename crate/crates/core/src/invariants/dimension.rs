use crate::groebner::{buchberger, InitialIdeal};
use crate::polyring::{Ideal, Monomial, TermOrder};
use crate::{Error, Result};

/// Krull dimension of `S/(gens)` for monomial generators: the largest set of
/// variables containing the support of no generator.
pub fn monomial_krull_dim(n: usize, gens: &[Monomial]) -> usize {
    let init = InitialIdeal::from_monomials(n, gens);
    if init.is_unit() {
        return 0;
    }
    let supports: Vec<u64> = init
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    grow(0, n, 0, 0, &supports, &mut best);
    best
}

fn grow(v: usize, n: usize, set: u64, size: usize, supports: &[u64], best: &mut usize) {
    if size + (n - v) <= *best {
        return;
    }
    if v == n {
        *best = size;
        return;
    }
    let with = set | (1 << v);
    if supports.iter().all(|&s| s & !with != 0) {
        grow(v + 1, n, with, size + 1, supports, best);
    }
    grow(v + 1, n, set, size, supports, best);
}

/// Krull dimension of `S/I` for a proper homogeneous ideal, read from the
/// degrevlex initial ideal.
pub fn krull_dim(i: &Ideal) -> Result<usize> {
    krull_dim_with(i, &TermOrder::degrevlex(i.ring().n()))
}

pub fn krull_dim_with(i: &Ideal, order: &TermOrder) -> Result<usize> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = buchberger(i, order, None)?;
    if gb.is_unit_ideal() {
        return Err(Error::Invalid("the unit ideal has no dimension".into()));
    }
    Ok(monomial_krull_dim(i.ring().n(), &gb.leading_monomials()))
}

/// `n − dim S/I`.
pub fn codim(i: &Ideal) -> Result<usize> {
    Ok(i.ring().n() - krull_dim(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::QuotientRing;
    use crate::invariants::hilbert_series;
    use crate::polyring::{OrderKind, Polynomial, Ring};
    use crate::scalars::Field;
    use proptest::prelude::*;

    #[test]
    fn small_dimensions() {
        let r = Ring::with_names(vec!["x".into(), "y".into(), "z".into()], Field::Rational).unwrap();
        assert_eq!(krull_dim(&Ideal::zero(&r)).unwrap(), 3);
        let i = Ideal::parse(&r, &["x*y", "x*z", "y*z"]).unwrap();
        assert_eq!(krull_dim(&i).unwrap(), 1);
        assert_eq!(codim(&i).unwrap(), 2);
        assert!(krull_dim(&Ideal::parse(&r, &["x", "1"]).unwrap()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn dimension_does_not_depend_on_the_order(
            coeffs in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 1..=3)
        ) {
            let r = Ring::new(3, Field::Rational).unwrap();
            let gens: Vec<Polynomial> = coeffs
                .iter()
                .map(|c| Polynomial::from_terms(&r, Monomial::all_of_degree(3, 2).into_iter().zip(c.iter().map(|&v| Field::Rational.from_i64(v)))))
                .collect();
            let i = Ideal::new(&r, gens).unwrap();
            let lex_rev = TermOrder::new(OrderKind::Lex, vec![2, 1, 0]).unwrap();
            let a = krull_dim(&i).unwrap();
            prop_assert_eq!(a, krull_dim_with(&i, &lex_rev).unwrap());
            let gb = buchberger(&i, &TermOrder::degrevlex(3), None).unwrap();
            prop_assert_eq!(a, monomial_krull_dim(3, &gb.leading_monomials()));
            prop_assert_eq!(a, hilbert_series(&QuotientRing::new(&i).unwrap(), 4).dim());
        }
    }
}
