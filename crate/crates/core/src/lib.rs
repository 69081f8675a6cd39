//! Exact commutative algebra for deciding and certifying Koszul-type properties
//! of standard graded algebras `S/I`.
//!
//! The crate is layered bottom-up:
//!
//! * [`scalars`] exact fields (rationals, prime fields), dense linear algebra,
//!   truncated power series;
//! * [`polyring`] multivariate polynomials, term orders, graded slices and
//!   constructors for structured inputs;
//! * [`groebner`] Buchberger's algorithm and the ideal calculus built on it;
//! * [`invariants`] Hilbert series, dimension, truncated minimal resolutions
//!   and the finite Koszulness probes;
//! * [`certificates`] Koszul filtrations, Gröbner flags, searches for quadratic
//!   Gröbner bases and lifts, quadric rank screening;
//! * [`apolarity`] inverse systems of forms, catalecticants and Hessians.

pub mod apolarity;
pub mod certificates;
pub mod groebner;
pub mod invariants;
pub mod polyring;
pub mod scalars;
pub mod verdict;

pub use verdict::{Bounds, Outcome, Property, Verdict, Witness};

use thiserror::Error;

/// Errors raised by the algebra layer. Failed searches and negative verdicts are
/// data ([`Verdict`]), never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^63")]
    NotPrime(u64),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("power series with zero constant term has no inverse")]
    SeriesNotInvertible,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("substitution matrix is singular")]
    SingularSubstitution,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
