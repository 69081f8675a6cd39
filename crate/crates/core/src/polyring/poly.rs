use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, TermOrder};
use crate::scalars::{DenseMatrix, Field, FieldElem};
use crate::{Error, Result};

/// `K[x_1, …, x_n]` with variable labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: usize,
    names: Vec<String>,
    field: Field,
}

impl Ring {
    /// Ring with default labels `x1..xn`.
    pub fn new(n: usize, field: Field) -> Result<Arc<Ring>> {
        Self::with_names((1..=n).map(|i| format!("x{i}")).collect(), field)
    }

    pub fn with_names(names: Vec<String>, field: Field) -> Result<Arc<Ring>> {
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::Invalid(format!("`{a}` is not a valid variable name")));
            }
            if names[..i].contains(a) {
                return Err(Error::Invalid(format!("variable `{a}` repeated")));
            }
        }
        Ok(Arc::new(Ring {
            n: names.len(),
            names,
            field,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            n: self.n,
            names: self.names.clone(),
            field,
        })
    }

    /// This ring with extra variables appended after the existing ones.
    pub fn extend(&self, extra: &[&str]) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.to_string()));
        Self::with_names(names, self.field)
    }

    pub fn degrevlex(&self) -> TermOrder {
        TermOrder::degrevlex(self.n)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial: monomials with nonzero coefficients, in canonical storage
/// order (see [`Monomial`]'s `Ord`).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElem) -> Self {
        Self::term(ring, Monomial::one(ring.n()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.n(), i), ring.field().one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: FieldElem) -> Self {
        assert_eq!(m.n(), ring.n(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    /// Sums the given terms (repeated monomials are combined).
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Linear form `Σ coeffs[i] x_i`.
    pub fn linear(ring: &Arc<Ring>, coeffs: &[FieldElem]) -> Self {
        assert_eq!(coeffs.len(), ring.n());
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(ring.n(), i), c.clone())),
        )
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &FieldElem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted decreasingly under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, FieldElem)> {
        let mut v: Vec<(Monomial, FieldElem)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// The component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::from_i64(&self.ring, 1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Makes the leading coefficient under `order` equal to one.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Normalises by the coefficient of the largest monomial in canonical
    /// storage order; a scale-free representative of the line through `self`.
    pub fn normalized(&self) -> Polynomial {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn eval(&self, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.ring.n());
        let mut acc = self.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                for _ in 0..m.exp(i) {
                    t = &t * &point[i];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `x_i ↦ Σ_j M[i][j] x_j`. `M` must be invertible.
    pub fn substitute_linear(&self, m: &DenseMatrix) -> Result<Polynomial> {
        let n = self.ring.n();
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!("substitution matrix must be {n}x{n}")));
        }
        if m.determinant()?.is_zero() {
            return Err(Error::SingularSubstitution);
        }
        Ok(self.substitute_linear_unchecked(m))
    }

    pub(crate) fn substitute_linear_unchecked(&self, m: &DenseMatrix) -> Polynomial {
        let n = self.ring.n();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::linear(&self.ring, m.row(i)))
            .collect();
        self.substitute(&images)
    }

    /// General substitution `x_i ↦ images[i]` (images may live in another ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.n());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::from_i64(&target, 1), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for i in m.support() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            out = &out + &t;
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::from_exps(exps), &(c * &self.field().from_i64(e as i64)));
        }
        out
    }

    /// Directional derivative `Σ a_i ∂f/∂x_i` for the linear form `Σ a_i x_i`.
    pub fn apply_linear_operator(&self, form: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for i in 0..self.ring.n() {
            let a = form.coeff(&Monomial::var(self.ring.n(), i));
            if !a.is_zero() {
                out = &out + &self.derivative(i).scale(&a);
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let order = TermOrder::degrevlex(self.ring.n());
        let (lm, lc) = divisor.leading_term(&order)?;
        let (lm, lc_inv) = (lm.clone(), lc.inv());
        let mut rest = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rest.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            let q = lm.quotient_of(&m)?;
            let coef = &c * &lc_inv;
            quot.add_term(q.clone(), &coef);
            rest = &rest - &divisor.mul_monomial(&q).scale(&coef);
        }
        Some(quot)
    }

    /// Moves the polynomial into a ring with more variables; `positions[i]` is
    /// the index of variable `i` in `target`.
    pub fn embed(&self, target: &Arc<Ring>, positions: &[usize]) -> Polynomial {
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(target.n(), positions), c.clone()))
                .collect(),
        }
    }

    /// Restricts to a ring on a subset of variables; `positions[i]` is the index
    /// in `self`'s ring of the target's variable `i`. Fails when a dropped
    /// variable occurs.
    pub fn restrict(&self, target: &Arc<Ring>, positions: &[usize]) -> Option<Polynomial> {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let kept: u32 = positions.iter().map(|&p| m.exp(p) as u32).sum();
            if kept != m.degree() {
                return None;
            }
            let exps = positions.iter().map(|&p| m.exp(p)).collect();
            out.add_term(Monomial::from_exps(exps), c);
        }
        Some(out)
    }

    /// Reinterprets coefficients in another ring with the same variables.
    pub fn change_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.n() != self.ring.n() {
            return Err(Error::RingMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let c = match c {
                FieldElem::Rational(r) => target.field().from_rational(r)?,
                other if target.field().contains(other) => other.clone(),
                other => {
                    return Err(Error::Invalid(format!(
                        "cannot move {other} from {} to {}",
                        other.field(),
                        target.field()
                    )))
                }
            };
            out.add_term(m.clone(), &c);
        }
        Ok(out)
    }

    /// Coefficients of a linear form in variable order.
    pub fn linear_coeffs(&self) -> Vec<FieldElem> {
        (0..self.ring.n())
            .map(|i| self.coeff(&Monomial::var(self.ring.n(), i)))
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let order = TermOrder::degrevlex(self.ring.n());
        let names = self.ring.names();
        let mut first = true;
        for (m, c) in self.sorted_terms(&order) {
            let neg = c.is_negative();
            let abs = if neg { -&c } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = if m.is_one() {
                abs.to_string()
            } else if abs.is_one() {
                m.format(names)
            } else {
                format!("{abs}*{}", m.format(names))
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use proptest::prelude::*;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::new(n, Field::Rational).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::with_names(vec!["x".into(), "y".into()], Field::Rational).unwrap();
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = Ring::with_names(vec!["x".into(), "y".into()], Field::Prime(2)).unwrap();
        assert_eq!(p(&r, "x+y").pow(2), p(&r, "x^2+y^2"));
    }

    #[test]
    fn identity_substitution() {
        let r = ring(3);
        let f = p(&r, "x1^2*x3 - 2*x2 + 7");
        let id = DenseMatrix::identity(Field::Rational, 3);
        assert_eq!(f.substitute_linear(&id).unwrap(), f);
        let sing = DenseMatrix::zeros(Field::Rational, 3, 3);
        assert_eq!(f.substitute_linear(&sing), Err(Error::SingularSubstitution));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p(&ring(2), "x1");
        let b = p(&ring(3), "x1");
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring(2);
        let f = p(&r, "x1^3 - x1*x2^2");
        assert_eq!(f.div_exact(&p(&r, "x1+x2")), Some(p(&r, "x1^2 - x1*x2")));
        assert_eq!(f.div_exact(&p(&r, "x1+2*x2")), None);
    }

    #[test]
    fn display_round_trip() {
        let r = ring(3);
        let f = p(&r, "-1/2*x1*x3 + 3*x2^2 - x3 + 4");
        assert_eq!(f.to_string(), "3*x2^2 - 1/2*x1*x3 - x3 + 4");
        assert_eq!(p(&r, &f.to_string()), f);
    }

    fn invertible_3x3() -> impl Strategy<Value = DenseMatrix> {
        proptest::collection::vec(-3i64..=3, 9)
            .prop_map(|v| {
                let rows: Vec<&[i64]> = v.chunks(3).collect();
                DenseMatrix::from_i64(Field::Rational, &rows)
            })
            .prop_filter("invertible", |m| !m.determinant().unwrap().is_zero())
    }

    proptest! {
        #[test]
        fn substitution_round_trip(m in invertible_3x3(), coeffs in proptest::collection::vec(-5i64..=5, 10)) {
            let r = ring(3);
            let f = Polynomial::from_terms(
                &r,
                Monomial::all_of_degree(3, 3).into_iter().zip(coeffs.iter().map(|&c| Field::Rational.from_i64(c))),
            );
            let inv = m.inverse().unwrap();
            let g = f.substitute_linear(&m).unwrap();
            prop_assert_eq!(g.substitute_linear(&inv).unwrap(), f);
        }
    }
}
