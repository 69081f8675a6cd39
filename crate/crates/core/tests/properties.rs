use std::sync::Arc;

use koszul_core::certificates::{monomial_filtration, search_flag, verify_filtration, verify_flag};
use koszul_core::groebner::{buchberger, minimal_generators, QuotientRing};
use koszul_core::invariants::{
    hilbert_series, koszul_probe, minimal_resolution, series_koszul_test, Subject,
};
use koszul_core::polyring::{
    generic_points, graded_slice, points_ideal, Ideal, Monomial, Polynomial, Ring, TermOrder,
};
use koszul_core::scalars::Field;
use koszul_core::Outcome;
use proptest::prelude::*;

fn ring(n: usize) -> Arc<Ring> {
    Ring::new(n, Field::Rational).unwrap()
}

fn quadrics(r: &Arc<Ring>, coeffs: &[Vec<i64>]) -> Vec<Polynomial> {
    let monos = Monomial::all_of_degree(r.n(), 2);
    coeffs
        .iter()
        .map(|row| {
            let mut p = Polynomial::zero(r);
            for (m, &c) in monos.iter().zip(row) {
                p.add_term(m.clone(), &Field::Rational.from_i64(c));
            }
            p
        })
        .filter(|p| !p.is_zero())
        .collect()
}

fn quadric_ideal() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..=3)
}

fn monomial_quadrics() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..10, 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reduced_bases_are_canonical(coeffs in quadric_ideal()) {
        let r = ring(3);
        let gens = quadrics(&r, &coeffs);
        prop_assume!(!gens.is_empty());
        let order = TermOrder::degrevlex(3);
        let gb = buchberger(&Ideal::new(&r, gens.clone()).unwrap(), &order, None).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
        prop_assert!(gb.is_reduced());
        let mut rev = gens;
        rev.reverse();
        let gb2 = buchberger(&Ideal::new(&r, rev).unwrap(), &order, None).unwrap();
        prop_assert_eq!(gb.elements(), gb2.elements());
    }

    #[test]
    fn standard_monomials_complement_slices(coeffs in quadric_ideal()) {
        let r = ring(3);
        let gens = quadrics(&r, &coeffs);
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&r, gens).unwrap();
        let q = QuotientRing::new(&ideal).unwrap();
        for d in 0..=5u32 {
            let slice = graded_slice(&ideal, d).unwrap().rank();
            let total = Monomial::all_of_degree(3, d).len();
            prop_assert_eq!(q.standard_monomials(d).len(), total - slice);
        }
    }

    #[test]
    fn residue_field_tables_are_consistent(coeffs in quadric_ideal()) {
        let r = ring(3);
        let gens = quadrics(&r, &coeffs);
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&r, gens).unwrap();
        let q = QuotientRing::new(&ideal).unwrap();
        let table = minimal_resolution(&q, &Subject::ResidueField, 3, 5).unwrap();
        prop_assert_eq!(table.get(1, 1), 3);
        let mingens = minimal_generators(&ideal).unwrap().len() as u64;
        prop_assert!(table.total(2) >= mingens);
        // Σ_i (−1)^i β_ij z^j is 1/H_R(z) where the table is complete
        let euler = table.euler_coefficients();
        let inv = hilbert_series(&q, euler.len() - 1).series().inverse().unwrap();
        let expect: Vec<String> = inv.coeffs().iter().map(|c| c.to_string()).collect();
        let got: Vec<String> = euler.iter().map(|c| c.to_string()).collect();
        prop_assert_eq!(got, expect);
        let v = koszul_probe(&q, 3, 5).unwrap();
        prop_assert_ne!(v.outcome, Outcome::CertifiedYes);
    }

    #[test]
    fn filtrations_pass_the_series_screen(picks in monomial_quadrics()) {
        let r = ring(4);
        let monos = Monomial::all_of_degree(4, 2);
        let gens: Vec<Polynomial> = picks.iter().map(|&i| Polynomial::monomial(&r, monos[i].clone())).collect();
        let q = QuotientRing::new(&Ideal::new(&r, gens).unwrap()).unwrap();
        let f = monomial_filtration(&q).unwrap();
        prop_assert!(verify_filtration(&f).unwrap().is_yes());
        prop_assert_ne!(series_koszul_test(&q, 10).unwrap().outcome, Outcome::CertifiedNo);
    }
}

#[test]
fn point_ideals_vanish_on_their_points() {
    let r = ring(3);
    for (count, seed) in [(3, 1), (4, 2), (5, 3), (6, 4)] {
        let pts = generic_points(Field::Rational, 3, count, seed, 5);
        let ideal = points_ideal(&r, &pts).unwrap();
        for g in ideal.generators() {
            for p in &pts {
                assert!(g.eval(p).is_zero());
            }
        }
        for d in 1..=3u32 {
            let total = Monomial::all_of_degree(3, d).len();
            let codim = total - graded_slice(&ideal, d).unwrap().rank();
            assert_eq!(codim, count.min(total));
        }
    }
}

#[test]
fn found_flags_are_filtrations() {
    let r = ring(3);
    for seed in [1, 2, 3] {
        let pts = generic_points(Field::Rational, 3, 4, seed + 10, 1);
        let q = QuotientRing::new(&points_ideal(&r, &pts).unwrap()).unwrap();
        let a = search_flag(&q, seed, 200).unwrap();
        let b = search_flag(&q, seed, 200).unwrap();
        assert_eq!(a.attempts, b.attempts);
        let flag = a.flag.expect("flag for four points");
        assert_eq!(flag.record(), b.flag.unwrap().record());
        assert!(verify_flag(&flag).unwrap().is_yes());
        let filtration = flag.to_filtration().unwrap();
        assert!(verify_filtration(&filtration).unwrap().is_yes());
        assert_ne!(series_koszul_test(&q, 10).unwrap().outcome, Outcome::CertifiedNo);
    }
}
