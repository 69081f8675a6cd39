//! Macaulay inverse systems of forms, catalecticants, Hessian minors and the
//! cubic criteria built on them.
//!
//! A linear form `y = Σ a_i x_i` acts on forms as the derivation
//! `Σ a_i ∂/∂x_i`; `I_f` is the ideal of operators `g(∂)` killing `f`.

mod conditions;
mod hessian;
mod inverse;

pub use conditions::{
    balla_condition, balla_search, balla_search_verdict, generic_singular_cubic, singular_cubic_flag, singular_flag_condition,
    DEFAULT_PAIR_ATTEMPTS,
};
pub use hessian::{determinant, hessian, minors, minors_ideal, theorem34_check, HessianData};
pub use inverse::{inverse_system, is_cone, ApolarForm, InverseSystemResult};
