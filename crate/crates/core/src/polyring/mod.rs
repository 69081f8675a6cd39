//! Multivariate polynomials over a field, monomial orders, graded slices and
//! constructors for structured inputs.

pub mod constructors;
mod ideal;
mod monomial;
mod order;
mod parse;
mod poly;

pub use constructors::{
    generic_form, generic_forms, generic_points, pinched_veronese, points_ideal, seeded_rng,
    symmetric_det_cubic,
};
pub use ideal::{graded_slice, GradedSlices, Ideal, LinearSpace, MonomialBasis};
pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Ring};
