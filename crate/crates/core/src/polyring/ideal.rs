use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, Polynomial, Ring, TermOrder};
use crate::scalars::{DenseMatrix, Echelon, FieldElem, SparseEchelon, SparseVec};
use crate::{Error, Result};

/// An ideal given by generators. Zero generators are dropped on construction;
/// homogeneity is computed.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            homogeneous,
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            homogeneous: true,
        }
    }

    /// The homogeneous maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::new(ring, (0..ring.n()).map(|i| Polynomial::var(ring, i)).collect())
            .expect("variables live in the ring")
    }

    /// Convenience constructor parsing each string with [`super::parse_polynomial`].
    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| super::parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(Polynomial::degree).max()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generator(&self, g: Polynomial) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Ideal::new(&self.ring, gens)
    }

    /// Applies `x_i ↦ Σ_j M[i][j] x_j` to every generator.
    pub fn substitute_linear(&self, m: &DenseMatrix) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute_linear(m))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    pub fn change_ring(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.change_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Minimal homogeneous generators, extracted degreewise: a generator of
    /// degree `d` is kept when it is not in `S_1·I_{d-1}` plus the generators
    /// kept before it. The result is a subset of the given generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let Some(top) = self.max_degree() else {
            return Ok(Vec::new());
        };
        Ok(GradedSlices::build(self, top)?.minimal_generators())
    }

    pub fn minimalized(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.minimal_generators()?)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Monomials of one degree, decreasing in degrevlex, with an index map. Pivot
/// columns of an echelon form over this basis are degrevlex leading monomials.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn of_degree(n: usize, d: u32) -> Self {
        let mut monomials = Monomial::all_of_degree(n, d);
        let order = TermOrder::degrevlex(n);
        monomials.sort_by(|a, b| order.cmp(b, a));
        Self::from_sorted(monomials)
    }

    pub fn from_sorted(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a polynomial whose monomials all lie in this basis.
    pub fn coordinates(&self, p: &Polynomial) -> SparseVec {
        let mut v: SparseVec = p
            .terms()
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn polynomial(&self, ring: &Arc<Ring>, v: &[(usize, FieldElem)]) -> Polynomial {
        Polynomial::from_terms(ring, v.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())))
    }
}

/// Degreewise spans `I_0, …, I_D` of a homogeneous ideal, built as
/// `I_d = S_1·I_{d-1} + span(generators of degree d)`.
pub struct GradedSlices {
    ring: Arc<Ring>,
    slices: Vec<Slice>,
}

struct Slice {
    basis: MonomialBasis,
    span: SparseEchelon,
    minimal: Vec<Polynomial>,
}

impl GradedSlices {
    pub fn build(ideal: &Ideal, top: u32) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = ideal.ring().clone();
        let n = ring.n();
        let mut slices: Vec<Slice> = Vec::with_capacity(top as usize + 1);
        for d in 0..=top {
            let basis = MonomialBasis::of_degree(n, d);
            let mut span = SparseEchelon::new(ring.field());
            if let Some(prev) = slices.last() {
                for row in prev.span.rows() {
                    for v in 0..n {
                        let mut shifted: SparseVec = row
                            .iter()
                            .map(|(i, c)| {
                                let m = prev.basis.monomials()[*i].mul_var(v);
                                (basis.index_of(&m).expect("degree d monomial"), c.clone())
                            })
                            .collect();
                        shifted.sort_by_key(|(i, _)| *i);
                        span.insert(&shifted);
                    }
                }
            }
            let mut minimal = Vec::new();
            for g in ideal.generators().iter().filter(|g| g.degree() == Some(d)) {
                if span.insert(&basis.coordinates(g)).is_some() {
                    minimal.push(g.clone());
                }
            }
            slices.push(Slice {
                basis,
                span,
                minimal,
            });
        }
        Ok(GradedSlices { ring, slices })
    }

    pub fn top(&self) -> u32 {
        self.slices.len() as u32 - 1
    }

    pub fn dim(&self, d: u32) -> usize {
        self.slices[d as usize].span.rank()
    }

    pub fn basis(&self, d: u32) -> &MonomialBasis {
        &self.slices[d as usize].basis
    }

    /// Reduced row echelon rows spanning `I_d` in the monomial basis.
    pub fn rref(&self, d: u32) -> Vec<SparseVec> {
        self.slices[d as usize].span.rref_rows()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        match f.degree() {
            None => true,
            Some(d) if d > self.top() || !f.is_homogeneous() => {
                panic!("membership beyond the computed degree range")
            }
            Some(d) => {
                let s = &self.slices[d as usize];
                s.span.contains(&s.basis.coordinates(f))
            }
        }
    }

    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        self.slices.iter().flat_map(|s| s.minimal.iter().cloned()).collect()
    }

    /// Polynomial basis of `I_d` (reduced echelon form).
    pub fn polynomials(&self, d: u32) -> Vec<Polynomial> {
        let s = &self.slices[d as usize];
        s.span
            .rref_rows()
            .iter()
            .map(|r| s.basis.polynomial(&self.ring, r))
            .collect()
    }
}

/// Matrix whose row space is `I_d` in the monomial basis of `S_d` (degrevlex
/// decreasing), in reduced row echelon form.
pub fn graded_slice(ideal: &Ideal, d: u32) -> Result<DenseMatrix> {
    let slices = GradedSlices::build(ideal, d)?;
    let width = slices.basis(d).len();
    let rows = slices
        .rref(d)
        .iter()
        .map(|r| crate::scalars::densify(ideal.ring().field(), r, width))
        .collect();
    DenseMatrix::from_rows(ideal.ring().field(), width, rows)
}

/// A subspace of `S_1` given by a linearly independent basis of linear forms.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSpace {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
}

impl LinearSpace {
    /// Validates that every form is linear and the forms are independent.
    pub fn new(ring: &Arc<Ring>, basis: Vec<Polynomial>) -> Result<Self> {
        let mut e = Echelon::new(ring.field(), ring.n());
        for f in &basis {
            if f.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() || !f.is_homogeneous() || f.degree() != Some(1) {
                return Err(Error::Invalid(format!("`{f}` is not a nonzero linear form")));
            }
            if !e.insert(f.linear_coeffs()) {
                return Err(Error::Invalid(format!("`{f}` is linearly dependent on earlier forms")));
            }
        }
        Ok(LinearSpace {
            ring: ring.clone(),
            basis,
        })
    }

    /// Keeps an independent subset of the given linear forms.
    pub fn span(ring: &Arc<Ring>, forms: &[Polynomial]) -> Result<Self> {
        let mut e = Echelon::new(ring.field(), ring.n());
        let mut basis = Vec::new();
        for f in forms {
            if f.is_zero() {
                continue;
            }
            if !f.is_homogeneous() || f.degree() != Some(1) {
                return Err(Error::Invalid(format!("`{f}` is not a linear form")));
            }
            if e.insert(f.linear_coeffs()) {
                basis.push(f.clone());
            }
        }
        Ok(LinearSpace {
            ring: ring.clone(),
            basis,
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        LinearSpace {
            ring: ring.clone(),
            basis: Vec::new(),
        }
    }

    pub fn variables(ring: &Arc<Ring>, vars: &[usize]) -> Self {
        LinearSpace {
            ring: ring.clone(),
            basis: vars.iter().map(|&v| Polynomial::var(ring, v)).collect(),
        }
    }

    pub fn full(ring: &Arc<Ring>) -> Self {
        Self::variables(ring, &(0..ring.n()).collect::<Vec<_>>())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ring.field(), self.ring.n());
        for f in &self.basis {
            e.insert(f.linear_coeffs());
        }
        e
    }

    pub fn contains(&self, form: &Polynomial) -> bool {
        if form.is_zero() {
            return true;
        }
        form.is_homogeneous() && form.degree() == Some(1) && self.echelon().contains(&form.linear_coeffs())
    }

    pub fn is_subspace_of(&self, other: &LinearSpace) -> bool {
        let e = other.echelon();
        self.basis.iter().all(|f| e.contains(&f.linear_coeffs()))
    }

    pub fn same_span(&self, other: &LinearSpace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `self + (form)`; fails when `form` already lies in the span.
    pub fn extended(&self, form: Polynomial) -> Result<LinearSpace> {
        let mut basis = self.basis.clone();
        basis.push(form);
        LinearSpace::new(&self.ring, basis)
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.basis.clone()).expect("forms live in the ring")
    }

    /// Canonical basis: reduced row echelon form of the coefficient vectors.
    pub fn canonical_basis(&self) -> Vec<Polynomial> {
        self.echelon()
            .rref_rows()
            .iter()
            .map(|r| Polynomial::linear(&self.ring, r))
            .collect()
    }
}

impl fmt::Display for LinearSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.basis.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for LinearSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use proptest::prelude::*;

    fn named(names: &[&str]) -> Arc<Ring> {
        Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap()
    }

    #[test]
    fn slice_examples() {
        let r = named(&["x"]);
        let m = graded_slice(&Ideal::parse(&r, &["x^2"]).unwrap(), 3).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.cols(), 1);

        let r = named(&["x", "y"]);
        let m = graded_slice(&Ideal::parse(&r, &["x", "y"]).unwrap(), 1).unwrap();
        assert_eq!(m.rows(), 2);

        let r = named(&["x", "y", "z"]);
        let v = Ideal::parse(&r, &["x^2", "x*y", "y^2-x*z", "y*z"]).unwrap();
        let m = graded_slice(&v, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 6));
    }

    #[test]
    fn inhomogeneous_slice_rejected() {
        let r = named(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - y"]).unwrap();
        assert!(matches!(graded_slice(&i, 2), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = named(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x^3 + x^2*y", "x*y", "y^3"]).unwrap();
        let mins = i.minimal_generators().unwrap();
        let shown: Vec<String> = mins.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x^2", "x*y", "y^3"]);
    }

    #[test]
    fn linear_space_validation() {
        let r = named(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert!(LinearSpace::new(&r, vec![x.clone(), &x + &x]).is_err());
        assert!(LinearSpace::new(&r, vec![&x * &y]).is_err());
        let v = LinearSpace::new(&r, vec![&x + &y]).unwrap();
        assert!(v.contains(&(&(&x + &y) + &(&x + &y))));
        assert!(!v.contains(&x));
        assert!(v.is_subspace_of(&LinearSpace::full(&r)));
    }

    proptest! {
        // S_1 · I_d ⊆ I_{d+1}
        #[test]
        fn slices_are_closed_under_variables(coeffs in proptest::collection::vec(-2i64..=2, 12)) {
            let r = Ring::new(3, Field::Rational).unwrap();
            let mons = Monomial::all_of_degree(3, 2);
            let g1 = Polynomial::from_terms(&r, mons.iter().cloned().zip(coeffs[..6].iter().map(|&c| Field::Rational.from_i64(c))));
            let g2 = Polynomial::from_terms(&r, mons.iter().cloned().zip(coeffs[6..].iter().map(|&c| Field::Rational.from_i64(c))));
            let ideal = Ideal::new(&r, vec![g1, g2]).unwrap();
            let slices = GradedSlices::build(&ideal, 4).unwrap();
            for d in 2..4 {
                for b in slices.polynomials(d) {
                    for v in 0..3 {
                        prop_assert!(slices.contains(&(&b * &Polynomial::var(&r, v))));
                    }
                }
            }
        }
    }
}
