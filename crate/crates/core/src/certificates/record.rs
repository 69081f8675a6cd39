use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::groebner::{colon, ideals_equal, QuotientRing};
use crate::polyring::{parse_polynomial, Ideal, LinearSpace, Polynomial, Ring};
use crate::scalars::Field;
use crate::Result;

/// Text form of a quotient `S/I`, enough to rebuild it exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientRecord {
    pub field: String,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
}

impl QuotientRecord {
    pub fn of(q: &QuotientRing) -> Self {
        QuotientRecord {
            field: q.ring().field().to_string(),
            vars: q.ring().names().to_vec(),
            ideal: q.ideal().generators().iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn ring(&self) -> Result<Arc<Ring>> {
        Ring::with_names(self.vars.clone(), self.field.parse::<Field>()?)
    }

    pub fn load(&self) -> Result<QuotientRing> {
        let ring = self.ring()?;
        let gens = self
            .ideal
            .iter()
            .map(|g| parse_polynomial(&ring, g))
            .collect::<Result<Vec<_>>>()?;
        QuotientRing::new(&Ideal::new(&ring, gens)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub base: usize,
    pub form: String,
    pub colon: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRecord {
    pub quotient: QuotientRecord,
    /// Each member as a list of linear forms.
    pub members: Vec<Vec<String>>,
    /// `None` exactly for the zero ideal.
    pub steps: Vec<Option<StepRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRecord {
    pub quotient: QuotientRecord,
    /// `V_i` is spanned by the first `i` forms.
    pub forms: Vec<String>,
    pub colon_map: Vec<usize>,
}

pub(crate) fn parse_space(ring: &Arc<Ring>, forms: &[String]) -> Result<LinearSpace> {
    let polys = forms
        .iter()
        .map(|f| parse_polynomial(ring, f))
        .collect::<Result<Vec<_>>>()?;
    LinearSpace::new(ring, polys)
}

pub(crate) fn space_key(v: &LinearSpace) -> String {
    v.canonical_basis()
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Colon calculus for linear-generated ideals of `R`, done on preimages in `S`.
/// Colons are memoized on `(V, V + (x))`: `(V + I) : x` depends only on the
/// class of `x` modulo `V` up to a scalar.
pub(crate) struct Lifter<'a> {
    q: &'a QuotientRing,
    cache: RefCell<HashMap<(String, String), Option<LinearSpace>>>,
    computed: RefCell<usize>,
}

impl<'a> Lifter<'a> {
    pub(crate) fn new(q: &'a QuotientRing) -> Self {
        Lifter {
            q,
            cache: RefCell::new(HashMap::new()),
            computed: RefCell::new(0),
        }
    }

    pub(crate) fn lift(&self, v: &LinearSpace) -> Result<Ideal> {
        let mut gens = v.basis().to_vec();
        gens.extend(self.q.ideal().generators().iter().cloned());
        Ideal::new(self.q.ring(), gens)
    }

    pub(crate) fn colon(&self, base: &LinearSpace, x: &Polynomial) -> Result<Ideal> {
        *self.computed.borrow_mut() += 1;
        colon(&self.lift(base)?, x)
    }

    /// `(V + I) : x` as a space `L` of linear forms with `(V + I) : x = (L) + I`,
    /// or `None` when the colon is not generated by linear forms modulo `I`.
    pub(crate) fn linear_colon(&self, base: &LinearSpace, x: &Polynomial) -> Result<Option<LinearSpace>> {
        let key = (space_key(base), space_key(&base.extended(x.clone())?));
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let c = self.colon(base, x)?;
        let linear: Vec<Polynomial> = c
            .generators()
            .iter()
            .filter(|g| g.degree() == Some(1))
            .cloned()
            .collect();
        let l = LinearSpace::span(self.q.ring(), &linear)?;
        let out = if ideals_equal(&c, &self.lift(&l)?)? { Some(l) } else { None };
        self.cache.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    /// Whether `(V + I) : x = (U) + I`.
    pub(crate) fn colon_is(&self, base: &LinearSpace, x: &Polynomial, target: &LinearSpace) -> Result<bool> {
        ideals_equal(&self.colon(base, x)?, &self.lift(target)?)
    }

    pub(crate) fn colons_computed(&self) -> usize {
        *self.computed.borrow()
    }
}
