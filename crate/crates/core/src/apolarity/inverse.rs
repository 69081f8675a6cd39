use num_bigint::BigInt;
use num_traits::One;

use crate::groebner::QuotientRing;
use crate::polyring::constructors::monomials_desc;
use crate::polyring::{Ideal, Monomial, Polynomial};
use crate::scalars::{sparsify, DenseMatrix};
use crate::{Error, Result};

/// A nonzero form `f` of degree `s` with its catalecticants
/// `Cat(a, s−a)`: rows indexed by monomials `x^α` of degree `a`, columns by
/// `x^β` of degree `s−a` (both decreasing in degrevlex), entry
/// `∂^α ∂^β f = (α+β)!·c_{α+β}`.
#[derive(Clone, Debug)]
pub struct ApolarForm {
    f: Polynomial,
    s: u32,
    catalecticants: Vec<DenseMatrix>,
}

impl ApolarForm {
    /// Over `F_p` the factorials must be units, so `p > s` is required.
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Invalid("the zero form has no inverse system".into()));
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let s = f.degree().expect("nonzero");
        let p = f.field().characteristic();
        if p != 0 && p <= s as u64 {
            return Err(Error::Invalid(format!(
                "characteristic {p} does not exceed the degree {s}"
            )));
        }
        let catalecticants = (0..=s).map(|a| catalecticant(f, s, a)).collect();
        Ok(ApolarForm {
            f: f.clone(),
            s,
            catalecticants,
        })
    }

    pub fn form(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.f.ring().n()
    }

    /// `Cat(a, s−a)`; the transpose of `Cat(s−a, a)`.
    pub fn catalecticant(&self, a: u32) -> &DenseMatrix {
        &self.catalecticants[a as usize]
    }

    /// Basis of `(I_f)_d`.
    pub fn annihilator(&self, d: u32) -> Vec<Polynomial> {
        let ring = self.f.ring();
        let rows = monomials_desc(self.n(), d);
        if d > self.s {
            return rows.into_iter().map(|m| Polynomial::monomial(ring, m)).collect();
        }
        self.catalecticant(d)
            .transpose()
            .kernel_basis()
            .iter()
            .map(|v| {
                Polynomial::from_terms(
                    ring,
                    sparsify(v).into_iter().map(|(i, c)| (rows[i].clone(), c)),
                )
            })
            .collect()
    }
}

fn factorial(m: &Monomial) -> BigInt {
    m.exps()
        .iter()
        .flat_map(|&e| 1..=e as u64)
        .fold(BigInt::one(), |acc, k| acc * k)
}

fn catalecticant(f: &Polynomial, s: u32, a: u32) -> DenseMatrix {
    let n = f.ring().n();
    let field = f.field();
    let rows = monomials_desc(n, a);
    let cols = monomials_desc(n, s - a);
    let mut m = DenseMatrix::zeros(field, rows.len(), cols.len());
    for (i, alpha) in rows.iter().enumerate() {
        for (j, beta) in cols.iter().enumerate() {
            let gamma = alpha.mul(beta);
            let c = f.coeff(&gamma);
            if !c.is_zero() {
                m.set(i, j, &c * &field.from_bigint(&factorial(&gamma)));
            }
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct InverseSystemResult {
    /// `I_f` with minimal generators, sorted by degree.
    pub ideal: Ideal,
    pub quotient: QuotientRing,
    /// `dim (R_f)_d` for `d = 0..=s`.
    pub h_vector: Vec<usize>,
}

/// `I_f = {g : g(∂) f = 0}`: the left kernel of `Cat(d, s−d)` in degrees
/// `d ≤ s` and everything above, minimalized through degree `s+1`.
pub fn inverse_system(f: &Polynomial) -> Result<InverseSystemResult> {
    let form = ApolarForm::new(f)?;
    let s = form.degree();
    let mut gens = Vec::new();
    for d in 1..=s + 1 {
        gens.extend(form.annihilator(d));
    }
    let ideal = Ideal::new(f.ring(), gens)?.minimalized()?;
    let h_vector = (0..=s).map(|d| form.catalecticant(d).rank()).collect();
    let quotient = QuotientRing::new(&ideal)?;
    Ok(InverseSystemResult {
        ideal,
        quotient,
        h_vector,
    })
}

/// Whether the first partials of `f` are linearly dependent, i.e.
/// `rank Cat(1, s−1) < n`.
pub fn is_cone(f: &Polynomial) -> Result<bool> {
    let form = ApolarForm::new(f)?;
    if form.degree() == 0 {
        return Ok(true);
    }
    Ok(form.catalecticant(1).rank() < form.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideals_equal, is_quadratic_ideal};
    use crate::polyring::{parse_polynomial, Ring};
    use crate::scalars::Field;

    fn form(names: &[&str], text: &str) -> Polynomial {
        let r = Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap();
        parse_polynomial(&r, text).unwrap()
    }

    #[test]
    fn single_variable_cube() {
        let res = inverse_system(&form(&["x"], "x^3")).unwrap();
        assert_eq!(res.ideal.to_string(), "(x^4)");
        assert_eq!(res.h_vector, vec![1, 1, 1, 1]);
    }

    #[test]
    fn product_of_variables() {
        let f = form(&["x", "y", "z"], "x*y*z");
        let res = inverse_system(&f).unwrap();
        let expect = Ideal::parse(f.ring(), &["x^2", "y^2", "z^2"]).unwrap();
        assert!(ideals_equal(&res.ideal, &expect).unwrap());
        assert_eq!(res.h_vector, vec![1, 3, 3, 1]);
    }

    #[test]
    fn fermat_cubic_is_not_quadratic() {
        let f = form(&["x1", "x2", "x3"], "x1^3 + x2^3 + x3^3");
        let res = inverse_system(&f).unwrap();
        let quadrics: Vec<String> = res
            .ideal
            .generators()
            .iter()
            .filter(|g| g.degree() == Some(2))
            .map(|g| g.to_string())
            .collect();
        assert_eq!(quadrics, vec!["x1*x2", "x1*x3", "x2*x3"]);
        assert!(!is_quadratic_ideal(&res.ideal).unwrap());
    }

    #[test]
    fn cones() {
        assert!(is_cone(&form(&["x", "y"], "x^3")).unwrap());
        assert!(!is_cone(&form(&["x", "y"], "x^3 + y^3")).unwrap());
        assert!(is_cone(&form(&["x", "y"], "x^3 + 3*x^2*y + 3*x*y^2 + y^3")).unwrap());
    }

    #[test]
    fn catalecticants_are_transposes() {
        let f = ApolarForm::new(&form(&["x", "y", "z"], "x^3 + 2*x*y*z - y^2*z + 5*z^3")).unwrap();
        for a in 0..=3 {
            assert_eq!(f.catalecticant(a).transpose(), *f.catalecticant(3 - a));
        }
        assert_eq!(f.catalecticant(1).rank(), f.catalecticant(2).rank());
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let r = Ring::new(2, Field::prime(3).unwrap()).unwrap();
        assert!(inverse_system(&parse_polynomial(&r, "x1^3 + x2^3").unwrap()).is_err());
        let r = Ring::new(2, Field::prime(5).unwrap()).unwrap();
        let res = inverse_system(&parse_polynomial(&r, "x1^3 + x2^3").unwrap()).unwrap();
        assert_eq!(res.h_vector, vec![1, 2, 2, 1]);
    }

    #[test]
    fn zero_form_is_rejected() {
        let r = Ring::new(2, Field::Rational).unwrap();
        assert!(inverse_system(&Polynomial::zero(&r)).is_err());
    }
}
