use std::fmt;
use std::sync::Arc;

use super::{buchberger, GroebnerBasis};
use crate::polyring::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::{Error, Result};

/// Minimal monomial generators of an initial (or any monomial) ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct InitialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl InitialIdeal {
    /// Keeps the minimal elements under divisibility, in the given order.
    pub fn from_monomials(n: usize, monomials: &[Monomial]) -> Self {
        let mut generators: Vec<Monomial> = Vec::new();
        for (i, m) in monomials.iter().enumerate() {
            let redundant = monomials
                .iter()
                .enumerate()
                .any(|(j, o)| o.divides(m) && (o != m || j < i));
            if !redundant {
                generators.push(m.clone());
            }
        }
        InitialIdeal { n, generators }
    }

    pub fn of(gb: &GroebnerBasis) -> Self {
        Self::from_monomials(gb.ring().n(), &gb.leading_monomials())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.generators.iter().map(Monomial::degree).max()
    }

    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.degree() == 2)
    }
}

impl fmt::Debug for InitialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

/// `R = S/I` for a homogeneous ideal, with a Gröbner basis of `I`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ring: Arc<Ring>,
    defining: GroebnerBasis,
    initial: InitialIdeal,
}

impl QuotientRing {
    /// Quotient by `ideal` with standard monomials for degrevlex.
    pub fn new(ideal: &Ideal) -> Result<Self> {
        Self::with_order(ideal, &TermOrder::degrevlex(ideal.ring().n()))
    }

    pub fn with_order(ideal: &Ideal, order: &TermOrder) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let defining = buchberger(ideal, order, None)?;
        Ok(Self::from_gb(defining))
    }

    pub fn from_gb(defining: GroebnerBasis) -> Self {
        QuotientRing {
            ring: defining.ring().clone(),
            initial: InitialIdeal::of(&defining),
            defining,
        }
    }

    /// The polynomial ring itself.
    pub fn polynomial_ring(ring: &Arc<Ring>) -> Self {
        Self::new(&Ideal::zero(ring)).expect("zero ideal is homogeneous")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn ideal(&self) -> &Ideal {
        self.defining.ideal()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.defining
    }

    pub fn order(&self) -> &TermOrder {
        self.defining.order()
    }

    pub fn initial_ideal(&self) -> &InitialIdeal {
        &self.initial
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.defining.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Standard monomials of degree `d`, decreasing in the basis order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.standard_monomials_up_to(d).pop().unwrap_or_default()
    }

    /// Standard monomials of each degree `0..=top`.
    pub fn standard_monomials_up_to(&self, top: u32) -> Vec<Vec<Monomial>> {
        let n = self.n();
        let mut levels: Vec<Vec<Monomial>> = Vec::with_capacity(top as usize + 1);
        let one = Monomial::one(n);
        levels.push(if self.initial.contains(&one) { Vec::new() } else { vec![one] });
        for _ in 1..=top {
            let prev = levels.last().expect("nonempty");
            let mut next = Vec::new();
            for m in prev {
                // each monomial arises once: multiply by variables at or after
                // the last variable present
                let last = (0..n).rev().find(|&v| m.exp(v) > 0).unwrap_or(0);
                for v in last..n {
                    let c = m.mul_var(v);
                    if !self.initial.contains(&c) {
                        next.push(c);
                    }
                }
            }
            let order = self.order();
            next.sort_by(|a, b| order.cmp(b, a));
            levels.push(next);
        }
        levels
    }
}

/// Standard monomials of degree `d` of `Q`.
pub fn quotient_hilbert_basis(q: &QuotientRing, d: u32) -> Vec<Monomial> {
    q.standard_monomials(d)
}
