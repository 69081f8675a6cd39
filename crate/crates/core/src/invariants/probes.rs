use num_traits::Signed;

use super::{hilbert_series, minimal_resolution, BettiTable, Subject};
use crate::groebner::{non_quadratic_generator, QuotientRing};
use crate::scalars::TruncatedSeries;
use crate::{Bounds, Error, Property, Result, Verdict, Witness};

pub const DEFAULT_I_MAX: usize = 5;
pub const DEFAULT_D_MAX: u32 = 9;

/// Linear-resolution probe. Never certifies Koszulness: a linear table is
/// only consistent with it.
pub fn koszul_probe(q: &QuotientRing, i_max: usize, d_max: u32) -> Result<Verdict> {
    let table = minimal_resolution(q, &Subject::ResidueField, i_max, d_max)?;
    Ok(koszul_probe_from_table(q, &table)?.with_bounds(Bounds {
        i_max: Some(i_max),
        d_max: Some(d_max as usize),
        ..Bounds::default()
    }))
}

pub fn koszul_probe_from_table(q: &QuotientRing, table: &BettiTable) -> Result<Verdict> {
    if let Some(e) = table.nonlinear_witness() {
        return Ok(Verdict::no(
            Property::Koszul,
            Witness::NonlinearBetti {
                i: e.i,
                j: e.j as usize,
                beta: e.beta,
            },
        ));
    }
    if let Some(g) = non_quadratic_generator(q.ideal())? {
        let d = g.degree().expect("nonzero");
        if d >= 3 {
            return Ok(Verdict::no(
                Property::Koszul,
                Witness::NonQuadraticGenerator {
                    degree: d,
                    generator: g.to_string(),
                },
            )
            .with_note("defining ideal is not quadratic"));
        }
    }
    Ok(Verdict::undetermined(
        Property::Koszul,
        Witness::LinearStrand {
            ranks: table.linear_strand(),
        },
    ))
}

/// `1/H_R(−z)` to degree `top`. For a Koszul algebra this is the Poincaré
/// series, so a negative coefficient refutes Koszulness.
pub fn inverse_series_at_minus_z(q: &QuotientRing, top: usize) -> TruncatedSeries {
    hilbert_series(q, top)
        .series()
        .negate_variable()
        .inverse()
        .expect("H(0) = 1")
}

pub fn series_koszul_test(q: &QuotientRing, top: usize) -> Result<Verdict> {
    let p = inverse_series_at_minus_z(q, top);
    let bounds = Bounds {
        trunc: Some(top),
        ..Bounds::default()
    };
    if let Some((k, c)) = p.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Ok(Verdict::no(
            Property::Koszul,
            Witness::NegativeSeriesCoefficient {
                degree: k,
                coefficient: c.to_string(),
            },
        )
        .with_bounds(bounds));
    }
    Ok(Verdict::undetermined(
        Property::Koszul,
        Witness::SeriesPrefix {
            coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
        },
    )
    .with_bounds(bounds))
}

/// Series test plus the cross-check `Σ_i (−1)^i β_ij = [z^j] 1/H_R(z)`
/// against a Betti table of `K`, on the degrees where the table is complete.
pub fn series_koszul_test_checked(q: &QuotientRing, top: usize, table: &BettiTable) -> Result<Verdict> {
    let verdict = series_koszul_test(q, top)?;
    let euler = table.euler_coefficients();
    let k = euler.len().min(top + 1);
    let inv = hilbert_series(q, top).series().inverse().expect("H(0) = 1");
    for (j, e) in euler.iter().enumerate().take(k) {
        if inv.coeff(j) != &num_rational::BigRational::from_integer((*e).into()) {
            return Err(Error::Invalid(format!(
                "Betti table disagrees with 1/H(z) in degree {j}"
            )));
        }
    }
    Ok(verdict.with_note(format!("Euler characteristic cross-check passed through degree {}", k - 1)))
}

/// Total Betti numbers `β_0, …, β_{i_max}` of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincarePrefix {
    pub series: TruncatedSeries,
    /// False when some column may have generators above the degree bound.
    pub complete: bool,
}

pub fn poincare_prefix(q: &QuotientRing, i_max: usize, d_max: u32) -> Result<PoincarePrefix> {
    let table = minimal_resolution(q, &Subject::ResidueField, i_max, d_max)?;
    Ok(poincare_prefix_from_table(&table))
}

pub fn poincare_prefix_from_table(table: &BettiTable) -> PoincarePrefix {
    let totals: Vec<i64> = table.totals().iter().map(|&b| b as i64).collect();
    PoincarePrefix {
        series: TruncatedSeries::from_i64(&totals, table.i_max),
        complete: table.complete_columns.iter().all(|&c| c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ideal, Ring};
    use crate::scalars::Field;
    use crate::Outcome;

    fn quotient(n: usize, gens: &[&str]) -> QuotientRing {
        let r = Ring::new(n, Field::Rational).unwrap();
        QuotientRing::new(&Ideal::parse(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn truncated_polynomial_rings() {
        let v = koszul_probe(&quotient(1, &["x1^3"]), 4, 9).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedNo);
        assert_eq!(v.witness, Witness::NonlinearBetti { i: 2, j: 3, beta: 1 });
        let v = koszul_probe(&quotient(1, &["x1^2"]), 4, 9).unwrap();
        assert_eq!(v.outcome, Outcome::UndeterminedAtBound);
    }

    #[test]
    fn series_screen() {
        let v = series_koszul_test(&quotient(1, &["x1^3"]), 6).unwrap();
        assert_eq!(
            v.witness,
            Witness::NegativeSeriesCoefficient {
                degree: 3,
                coefficient: "-1".into()
            }
        );
        let v = series_koszul_test(&quotient(1, &["x1^2"]), 6).unwrap();
        assert_eq!(v.outcome, Outcome::UndeterminedAtBound);
        for n in 1..=4 {
            let p = inverse_series_at_minus_z(&quotient(n, &[]), 6);
            let binom: Vec<i64> = (0..=6).map(|i| binomial(n as i64, i)).collect();
            assert_eq!(p, TruncatedSeries::from_i64(&binom, 6));
        }
    }

    fn binomial(n: i64, k: i64) -> i64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn poincare_prefixes() {
        let p = poincare_prefix(&quotient(1, &["x1^2"]), 4, 9).unwrap();
        assert_eq!(p.series, TruncatedSeries::from_i64(&[1, 1, 1, 1, 1], 4));
        assert!(p.complete);
        let p = poincare_prefix(&quotient(2, &[]), 3, 6).unwrap();
        assert_eq!(p.series, TruncatedSeries::from_i64(&[1, 2, 1, 0], 3));
    }

    #[test]
    fn checked_series_test() {
        let q = quotient(3, &["x1^2", "x1*x2", "x2^2 + x1*x3", "x2*x3"]);
        let t = minimal_resolution(&q, &Subject::ResidueField, 4, 6).unwrap();
        let v = series_koszul_test_checked(&q, 8, &t).unwrap();
        assert_eq!(v.outcome, Outcome::UndeterminedAtBound);
        assert!(koszul_probe_from_table(&q, &t).unwrap().is_undetermined());
    }
}
