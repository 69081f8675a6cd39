use super::record::{parse_space, FiltrationRecord, QuotientRecord, StepRecord};
use super::Lifter;
use crate::groebner::QuotientRing;
use crate::polyring::{parse_polynomial, LinearSpace, Polynomial};
use crate::{Error, Property, Result, Verdict, Witness};

/// Witness that a nonzero member `I` is reached from `J = members[base]`:
/// `I = J + (form)` and `J : I = members[colon]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub base: usize,
    pub form: Polynomial,
    pub colon: usize,
}

/// A candidate Koszul filtration: members are ideals of `R` given by spaces of
/// linear forms, with one step for every nonzero member.
#[derive(Clone, Debug)]
pub struct KoszulFiltration {
    quotient: QuotientRing,
    members: Vec<LinearSpace>,
    steps: Vec<Option<FiltrationStep>>,
}

impl KoszulFiltration {
    pub fn new(quotient: QuotientRing, members: Vec<LinearSpace>, steps: Vec<Option<FiltrationStep>>) -> Result<Self> {
        if members.len() != steps.len() {
            return Err(Error::Dimension(format!(
                "{} members but {} steps",
                members.len(),
                steps.len()
            )));
        }
        for m in &members {
            if m.ring() != quotient.ring() {
                return Err(Error::RingMismatch);
            }
        }
        for s in steps.iter().flatten() {
            if s.base >= members.len() || s.colon >= members.len() {
                return Err(Error::Invalid("step refers to a missing member".into()));
            }
            if s.form.ring() != quotient.ring() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(KoszulFiltration {
            quotient,
            members,
            steps,
        })
    }

    pub fn quotient(&self) -> &QuotientRing {
        &self.quotient
    }

    pub fn members(&self) -> &[LinearSpace] {
        &self.members
    }

    pub fn steps(&self) -> &[Option<FiltrationStep>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn record(&self) -> FiltrationRecord {
        FiltrationRecord {
            quotient: QuotientRecord::of(&self.quotient),
            members: self
                .members
                .iter()
                .map(|m| m.basis().iter().map(|f| f.to_string()).collect())
                .collect(),
            steps: self
                .steps
                .iter()
                .map(|s| {
                    s.as_ref().map(|s| StepRecord {
                        base: s.base,
                        form: s.form.to_string(),
                        colon: s.colon,
                    })
                })
                .collect(),
        }
    }

    /// Rebuilds a filtration from its record. Members that are not spaces of
    /// linear forms are rejected here.
    pub fn from_record(r: &FiltrationRecord) -> Result<Self> {
        let q = r.quotient.load()?;
        let ring = q.ring().clone();
        let members = r
            .members
            .iter()
            .map(|m| parse_space(&ring, m))
            .collect::<Result<Vec<_>>>()?;
        let steps = r
            .steps
            .iter()
            .map(|s| {
                s.as_ref()
                    .map(|s| {
                        Ok(FiltrationStep {
                            base: s.base,
                            form: parse_polynomial(&ring, &s.form)?,
                            colon: s.colon,
                        })
                    })
                    .transpose()
            })
            .collect::<Result<Vec<_>>>()?;
        KoszulFiltration::new(q, members, steps)
    }
}

fn failure(member: usize, condition: &str) -> Verdict {
    Verdict::no(
        Property::KoszulFiltration,
        Witness::CertificateFailure {
            member,
            condition: condition.into(),
        },
    )
}

/// Checks the filtration conditions with exact colon computations. A pass
/// certifies that `R` is Koszul and that every member `I` has
/// `Tor_i(R/I, K)_j = 0` for `i ≠ j`; a failure refutes only this certificate.
pub fn verify_filtration(f: &KoszulFiltration) -> Result<Verdict> {
    let q = &f.quotient;
    let full = LinearSpace::full(q.ring());
    if !f.members.iter().any(|m| m.dim() == 0) {
        return Ok(failure(0, "the zero ideal is not a member"));
    }
    if !f.members.iter().any(|m| m.same_span(&full)) {
        return Ok(failure(0, "the maximal ideal is not a member"));
    }
    let lifter = Lifter::new(q);
    for (k, member) in f.members.iter().enumerate() {
        if member.dim() == 0 {
            continue;
        }
        let Some(step) = &f.steps[k] else {
            return Ok(failure(k, "missing witness"));
        };
        let base = &f.members[step.base];
        if !base.is_subspace_of(member) || !member.contains(&step.form) {
            return Ok(failure(k, "containment"));
        }
        if member.dim() != base.dim() + 1 || base.contains(&step.form) {
            return Ok(failure(k, "cyclic quotient"));
        }
        if !lifter.colon_is(base, &step.form, &f.members[step.colon])? {
            return Ok(failure(k, "colon identity"));
        }
    }
    Ok(Verdict::yes(Property::Koszul, Witness::Filtration(f.record()))
        .with_note("every member I has Tor_i(R/I,K)_j = 0 for i != j"))
}

/// The filtration of all ideals generated by sets of variables, for a
/// quotient by quadratic monomials. Member `mask` is generated by the
/// variables whose bits are set; each step peels off the highest variable.
pub fn monomial_filtration(q: &QuotientRing) -> Result<KoszulFiltration> {
    let n = q.n();
    if n > 16 {
        return Err(Error::Invalid("at most 16 variables".into()));
    }
    for g in q.ideal().minimal_generators()? {
        if g.num_terms() != 1 || g.degree() != Some(2) {
            return Err(Error::Invalid(format!("`{g}` is not a quadratic monomial")));
        }
    }
    let ring = q.ring();
    let vars_of = |mask: usize| -> Vec<usize> { (0..n).filter(|v| mask >> v & 1 == 1).collect() };
    let members: Vec<LinearSpace> = (0..1usize << n)
        .map(|mask| LinearSpace::variables(ring, &vars_of(mask)))
        .collect();
    let lifter = Lifter::new(q);
    let mut steps = vec![None];
    for mask in 1..1usize << n {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let base = mask & !(1 << top);
        let x = Polynomial::var(ring, top);
        let colon = lifter
            .linear_colon(&members[base], &x)?
            .ok_or_else(|| Error::Invalid("colon is not generated by linear forms".into()))?;
        let mut target = 0usize;
        for g in colon.canonical_basis() {
            let (m, _) = g.terms().next().expect("nonzero");
            if g.num_terms() != 1 {
                return Err(Error::Invalid(format!("colon generator `{g}` is not a variable")));
            }
            target |= 1 << m.first_var().expect("linear");
        }
        steps.push(Some(FiltrationStep {
            base,
            form: x,
            colon: target,
        }));
    }
    KoszulFiltration::new(q.clone(), members, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ideal, Ring};
    use crate::scalars::Field;
    use crate::Outcome;

    fn quotient(names: &[&str], gens: &[&str]) -> QuotientRing {
        let r = Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap();
        QuotientRing::new(&Ideal::parse(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn hand_written_filtration_of_xy() {
        let q = quotient(&["x", "y"], &["x*y"]);
        let r = q.ring().clone();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let members = vec![
            LinearSpace::zero(&r),
            LinearSpace::variables(&r, &[0]),
            LinearSpace::variables(&r, &[1]),
            LinearSpace::full(&r),
        ];
        let steps = vec![
            None,
            Some(FiltrationStep { base: 0, form: x.clone(), colon: 2 }),
            Some(FiltrationStep { base: 0, form: y.clone(), colon: 1 }),
            Some(FiltrationStep { base: 1, form: y, colon: 1 }),
        ];
        let f = KoszulFiltration::new(q, members, steps).unwrap();
        let v = verify_filtration(&f).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedYes);
        assert_eq!(v.property, Property::Koszul);
    }

    #[test]
    fn polynomial_ring_in_one_variable() {
        let q = quotient(&["x"], &[]);
        let r = q.ring().clone();
        let f = KoszulFiltration::new(
            q,
            vec![LinearSpace::zero(&r), LinearSpace::full(&r)],
            vec![None, Some(FiltrationStep { base: 0, form: Polynomial::var(&r, 0), colon: 0 })],
        )
        .unwrap();
        assert!(verify_filtration(&f).unwrap().is_yes());
    }

    #[test]
    fn cube_relation_breaks_the_colon_condition() {
        let q = quotient(&["x"], &["x^3"]);
        let r = q.ring().clone();
        for colon in 0..2 {
            let f = KoszulFiltration::new(
                q.clone(),
                vec![LinearSpace::zero(&r), LinearSpace::full(&r)],
                vec![None, Some(FiltrationStep { base: 0, form: Polynomial::var(&r, 0), colon })],
            )
            .unwrap();
            let v = verify_filtration(&f).unwrap();
            assert_eq!(v.outcome, Outcome::CertifiedNo);
            assert_eq!(v.property, Property::KoszulFiltration);
            assert_eq!(
                v.witness,
                Witness::CertificateFailure { member: 1, condition: "colon identity".into() }
            );
        }
    }

    #[test]
    fn monomial_filtrations() {
        let f = monomial_filtration(&quotient(&["x", "y"], &["x*y"])).unwrap();
        assert_eq!(f.len(), 4);
        assert!(verify_filtration(&f).unwrap().is_yes());
        let f = monomial_filtration(&quotient(&["x"], &["x^2"])).unwrap();
        assert_eq!(f.steps()[1].as_ref().unwrap().colon, 1);
        assert!(verify_filtration(&f).unwrap().is_yes());
        let f = monomial_filtration(&quotient(&["x", "y", "z"], &["x^2", "x*y", "x*z", "y*z"])).unwrap();
        assert_eq!(f.len(), 8);
        assert!(verify_filtration(&f).unwrap().is_yes());
    }

    #[test]
    fn monomial_filtration_rejects_other_ideals() {
        assert!(monomial_filtration(&quotient(&["x", "y"], &["x^2 + y^2"])).is_err());
        assert!(monomial_filtration(&quotient(&["x", "y"], &["x^3"])).is_err());
    }

    #[test]
    fn record_round_trip() {
        let f = monomial_filtration(&quotient(&["x", "y", "z"], &["x*y", "z^2"])).unwrap();
        let rec = f.record();
        let back = KoszulFiltration::from_record(&rec).unwrap();
        assert_eq!(back.record(), rec);
        assert!(verify_filtration(&back).unwrap().is_yes());
    }

    #[test]
    fn nonlinear_members_are_rejected() {
        let f = monomial_filtration(&quotient(&["x", "y"], &["x*y"])).unwrap();
        let mut rec = f.record();
        rec.members[1] = vec!["x^2".into()];
        assert!(KoszulFiltration::from_record(&rec).is_err());
    }
}
