use num_rational::BigRational;

use crate::groebner::{buchberger, ideals_equal, is_quadratic_gb, QuotientRing};
use crate::invariants::hilbert_series;
use crate::polyring::{Ideal, Polynomial, TermOrder};
use crate::scalars::{DenseMatrix, TruncatedSeries};
use crate::{Bounds, Error, Property, Result, Verdict, Witness};

pub const DEFAULT_LIFT_TRUNCATION: usize = 12;

/// The lift `(y_i^2 + q_i)` of a complete intersection of quadrics `(q_i)` in
/// the ring extended by fresh variables `y_1..y_m`, with the forms `y_i`.
pub fn caviglia_lift(ci: &Ideal) -> Result<(Ideal, Vec<Polynomial>)> {
    let ring = ci.ring();
    if ci.generators().iter().any(|q| q.degree() != Some(2) || !q.is_homogeneous()) {
        return Err(Error::Invalid("expected quadrics".into()));
    }
    let n = ring.n();
    let m = ci.generators().len();
    let names: Vec<String> = (1..=m)
        .map(|i| {
            let mut name = format!("y{i}");
            while ring.var_index(&name).is_some() {
                name.insert(0, '_');
            }
            name
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let big = ring.extend(&refs)?;
    let pos: Vec<usize> = (0..n).collect();
    let forms: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(&big, n + i)).collect();
    let gens = ci
        .generators()
        .iter()
        .zip(&forms)
        .map(|(q, y)| &(y * y) + &q.embed(&big, &pos))
        .collect();
    Ok((Ideal::new(&big, gens)?, forms))
}

fn failed(condition: &str) -> Verdict {
    Verdict::undetermined(
        Property::LgQuadratic,
        Witness::CertificateFailure {
            member: 0,
            condition: condition.into(),
        },
    )
}

/// [`verify_lg_lift_to`] at the default truncation.
pub fn verify_lg_lift(r_ideal: &Ideal, lift: &Ideal, forms: &[Polynomial], order: &TermOrder) -> Result<Verdict> {
    verify_lg_lift_to(r_ideal, lift, forms, order, DEFAULT_LIFT_TRUNCATION)
}

/// Checks a lift `S'/J` of `R = S/I` along linear forms `y_1..y_s`, where
/// `S'` has the variables of `S` first and `s` further variables:
///
/// 1. `J` has a quadratic reduced Gröbner basis for `order`;
/// 2. the `y_i` form a regular sequence on `S'/J`, by
///    `H_{S'/J}(z)·(1−z)^s = H_R(z)` through degree `top` and, exactly, by
///    equality of the numerators over `(1−z)^{n}`;
/// 3. `J + (y)` becomes `I` after solving the `y_i` for the extra variables.
///
/// All three together certify that `R` is LG-quadratic. A failure refutes
/// only the proposed lift.
pub fn verify_lg_lift_to(
    r_ideal: &Ideal,
    lift: &Ideal,
    forms: &[Polynomial],
    order: &TermOrder,
    top: usize,
) -> Result<Verdict> {
    for y in forms {
        if y.ring() != lift.ring() {
            return Err(Error::RingMismatch);
        }
        if y.is_zero() || !y.is_homogeneous() || y.degree() != Some(1) {
            return Err(Error::Invalid(format!("`{y}` is not a linear form")));
        }
    }
    if !lift.is_homogeneous() || !r_ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let small = r_ideal.ring();
    let big = lift.ring();
    let n = small.n();
    let s = forms.len();
    if big.n() != n + s || big.names()[..n] != small.names()[..] || big.field() != small.field() {
        return Err(Error::Invalid(format!(
            "the lift ring must extend the ring of R by exactly {s} variables"
        )));
    }
    let bounds = Bounds {
        trunc: Some(top),
        ..Bounds::default()
    };

    let gb = buchberger(lift, order, None)?;
    if !is_quadratic_gb(&gb) {
        return Ok(failed("quadratic Groebner basis").with_bounds(bounds));
    }

    let field = small.field();
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(small, i)).collect();
    if s > 0 {
        // forms = A·y + B·x; solve y = −A⁻¹·B·x
        let a_rows: Vec<Vec<_>> = forms
            .iter()
            .map(|f| f.linear_coeffs()[n..].to_vec())
            .collect();
        let a = DenseMatrix::from_rows(field, s, a_rows)?;
        let Some(a_inv) = a.inverse() else {
            return Ok(failed("forms do not eliminate the extra variables").with_bounds(bounds));
        };
        for k in 0..s {
            let mut image = Polynomial::zero(small);
            for (l, f) in forms.iter().enumerate() {
                let b = Polynomial::linear(small, &f.linear_coeffs()[..n]);
                image = &image - &b.scale(a_inv.get(k, l));
            }
            images.push(image);
        }
    }
    let reduced = Ideal::new(
        small,
        lift.generators().iter().map(|g| g.substitute(&images)).collect(),
    )?;
    let quotient_ok = ideals_equal(&reduced, r_ideal)?;

    let lifted = QuotientRing::from_gb(gb.clone());
    let r = QuotientRing::new(r_ideal)?;
    let h_lift = hilbert_series(&lifted, top);
    let h_r = hilbert_series(&r, top);
    let mut factor = TruncatedSeries::one(top);
    let one_minus_z = TruncatedSeries::from_i64(&[1, -1], top);
    for _ in 0..s {
        factor = factor.mul(&one_minus_z);
    }
    let product = h_lift.series().mul(&factor);
    let regular = product == h_r.series() && h_lift.k_polynomial() == h_r.k_polynomial();
    if !regular {
        return Ok(failed("regular sequence").with_bounds(bounds));
    }
    if !quotient_ok {
        return Ok(failed("quotient by the forms").with_bounds(bounds));
    }
    Ok(Verdict::yes(
        Property::LgQuadratic,
        Witness::Lift {
            basis: gb.elements().iter().map(|g| g.to_string()).collect(),
            hilbert_prefix: product.coeffs().iter().map(BigRational::to_string).collect(),
            quotient_numerator: h_r.numerator().iter().map(|c| c.to_string()).collect(),
        },
    )
    .with_bounds(bounds))
}
