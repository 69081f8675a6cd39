//! Buchberger's algorithm and the ideal calculus built on it.

mod buchberger;
mod ops;
mod quotient;

pub use buchberger::{buchberger, is_groebner_basis, GbStats, GroebnerBasis};
pub use ops::{
    colon, colon_ideal, eliminate, eliminate_first, ideal_contains, ideals_equal, intersect,
    is_quadratic_gb, is_quadratic_ideal, minimal_generators, non_quadratic_generator, quadratic_verdict, toric_ideal,
};
pub use quotient::{quotient_hilbert_basis, InitialIdeal, QuotientRing};

use crate::polyring::Polynomial;

/// Normal form of `f` with respect to `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}
