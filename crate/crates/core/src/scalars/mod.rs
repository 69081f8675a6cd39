//! Exact coefficient arithmetic, dense linear algebra over those fields and
//! truncated formal power series.

mod field;
mod matrix;
mod series;
mod sparse;

pub use field::{Field, FieldElem};
pub use matrix::{DenseMatrix, Echelon, Rref};
pub use series::TruncatedSeries;
pub use sparse::{densify, sparsify, SparseEchelon, SparseVec};
