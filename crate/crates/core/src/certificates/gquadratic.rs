use num_rational::BigRational;

use crate::groebner::{buchberger, is_quadratic_gb, non_quadratic_generator};
use crate::polyring::constructors::random_invertible;
use crate::polyring::{seeded_rng, Ideal, TermOrder};
use crate::scalars::{DenseMatrix, Field};
use crate::{Bounds, Error, Property, Result, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Identity,
    SeededRandom { seed: u64, index: usize },
    User,
}

/// An invertible substitution `x_i ↦ Σ_j m[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    matrix: DenseMatrix,
    provenance: Provenance,
}

impl CoordinateChange {
    pub fn identity(field: Field, n: usize) -> Self {
        CoordinateChange {
            matrix: DenseMatrix::identity(field, n),
            provenance: Provenance::Identity,
        }
    }

    pub fn user(matrix: DenseMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() || matrix.determinant()?.is_zero() {
            return Err(Error::SingularSubstitution);
        }
        Ok(CoordinateChange {
            matrix,
            provenance: Provenance::User,
        })
    }

    /// Entries in `{-2..2}`, the `index`-th draw from the stream of `seed`.
    pub fn seeded(field: Field, n: usize, seed: u64, index: usize) -> Self {
        let mut rng = seeded_rng(seed);
        let mut m = random_invertible(field, n, &mut rng, 2);
        for _ in 0..index {
            m = random_invertible(field, n, &mut rng, 2);
        }
        CoordinateChange {
            matrix: m,
            provenance: Provenance::SeededRandom { seed, index },
        }
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn apply(&self, ideal: &Ideal) -> Result<Ideal> {
        ideal.substitute_linear(&self.matrix)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect()
    }
}

fn quadratic_witness(ideal: &Ideal, order: &TermOrder, change: Option<&CoordinateChange>) -> Result<Option<Witness>> {
    let gb = buchberger(ideal, order, None)?;
    if !is_quadratic_gb(&gb) {
        return Ok(None);
    }
    Ok(Some(Witness::QuadraticGroebnerBasis {
        order: order.spec(),
        change: change.map(CoordinateChange::to_strings),
        basis: gb.elements().iter().map(|g| g.to_string()).collect(),
    }))
}

/// Looks for a quadratic reduced Gröbner basis: every order on the given
/// coordinates, then `changes` seeded coordinate changes under every order.
/// A non-quadratic ideal is certified not G-quadratic; a failed search is
/// undetermined.
pub fn gquadratic_search(ideal: &Ideal, orders: &[TermOrder], changes: usize, seed: u64) -> Result<Verdict> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if let Some(g) = non_quadratic_generator(ideal)? {
        return Ok(Verdict::no(
            Property::GQuadratic,
            Witness::NonQuadraticGenerator {
                degree: g.degree().unwrap_or(0),
                generator: g.to_string(),
            },
        )
        .with_note("an ideal with a quadratic initial ideal is itself quadratic"));
    }
    let bounds = Bounds {
        attempts: Some(changes),
        seed: Some(seed),
        ..Bounds::default()
    };
    for order in orders {
        if let Some(w) = quadratic_witness(ideal, order, None)? {
            return Ok(Verdict::yes(Property::GQuadratic, w).with_bounds(bounds));
        }
    }
    let field = ideal.ring().field();
    let n = ideal.ring().n();
    let mut rng = seeded_rng(seed);
    for index in 0..changes {
        let change = CoordinateChange {
            matrix: random_invertible(field, n, &mut rng, 2),
            provenance: Provenance::SeededRandom { seed, index },
        };
        let moved = change.apply(ideal)?;
        for order in orders {
            if let Some(w) = quadratic_witness(&moved, order, Some(&change))? {
                return Ok(Verdict::yes(Property::GQuadratic, w)
                    .with_bounds(bounds)
                    .with_note(format!("coordinate change {index} of seed {seed}")));
            }
        }
    }
    Ok(Verdict::undetermined(
        Property::GQuadratic,
        Witness::SearchExhausted {
            attempts: changes * orders.len().max(1),
        },
    )
    .with_bounds(bounds))
}

/// Replays a [`Witness::QuadraticGroebnerBasis`]: applies the recorded change
/// and order and returns the reduced basis as strings.
pub fn replay_change(ideal: &Ideal, witness: &Witness) -> Result<Vec<String>> {
    let Witness::QuadraticGroebnerBasis { order, change, .. } = witness else {
        return Err(Error::Invalid("not a quadratic Groebner basis witness".into()));
    };
    let ring = ideal.ring();
    let order = TermOrder::parse(order, ring.names())?;
    let moved = match change {
        None => ideal.clone(),
        Some(rows) => {
            let parsed = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| {
                            let v: BigRational = c
                                .trim()
                                .parse()
                                .map_err(|_| Error::Invalid(format!("bad matrix entry `{c}`")))?;
                            ring.field().from_rational(&v)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            CoordinateChange::user(DenseMatrix::from_rows(ring.field(), ring.n(), parsed)?)?.apply(ideal)?
        }
    };
    Ok(buchberger(&moved, &order, None)?
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{generic_forms, Ring};
    use crate::Outcome;

    fn ideal(names: &[&str], gens: &[&str]) -> Ideal {
        let r = Ring::with_names(names.iter().map(|s| s.to_string()).collect(), Field::Rational).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    #[test]
    fn monomial_quadrics() {
        let i = ideal(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let v = gquadratic_search(&i, &[TermOrder::degrevlex(2)], 0, 1).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedYes);
        let Witness::QuadraticGroebnerBasis { order, change, .. } = &v.witness else {
            panic!("unexpected witness");
        };
        assert_eq!(order, "degrevlex");
        assert!(change.is_none());
    }

    #[test]
    fn exceptional_lift_in_given_coordinates() {
        let i = ideal(&["x", "y", "z", "t"], &["x^2 + x*t", "x*y + y*t", "y*z + x*t", "y^2 + x*z"]);
        let order = TermOrder::parse("revlex-perm:t,x,y,z", i.ring().names()).unwrap();
        let v = gquadratic_search(&i, &[order], 0, 1).unwrap();
        assert!(v.is_yes());
        assert_eq!(replay_change(&i, &v.witness).unwrap(), match &v.witness {
            Witness::QuadraticGroebnerBasis { basis, .. } => basis.clone(),
            _ => unreachable!(),
        });
    }

    #[test]
    fn general_quadrics_are_not_found() {
        let r = Ring::new(3, Field::Rational).unwrap();
        let i = Ideal::new(&r, generic_forms(&r, 2, 3, 4)).unwrap();
        let orders = [TermOrder::degrevlex(3), TermOrder::lex(3)];
        let v = gquadratic_search(&i, &orders, 3, 4).unwrap();
        assert_eq!(v.outcome, Outcome::UndeterminedAtBound);
    }

    #[test]
    fn cubic_generator_is_refuted() {
        let i = ideal(&["x", "y"], &["x^2", "y^3"]);
        let v = gquadratic_search(&i, &[TermOrder::degrevlex(2)], 2, 1).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedNo);
    }
}
