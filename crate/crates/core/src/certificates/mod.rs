//! Finite positive certificates and bounded searches.
//!
//! Koszul filtrations and Gröbner flags are verified by exact colon
//! computations in the polynomial ring: an ideal of `R = S/I` generated by a
//! space `V` of linear forms is handled through its preimage `(V) + I`.
//! Searches only ever produce certificates; a failed search is reported as
//! undetermined, never as a proof of absence.

mod filtration;
mod flag;
mod gquadratic;
mod lift;
mod rank;
mod record;

pub use filtration::{monomial_filtration, verify_filtration, FiltrationStep, KoszulFiltration};
pub use flag::{
    linear_form_pool, search_flag, search_flag_verdict, verify_flag, FlagSearch, GroebnerFlag,
    DEFAULT_FLAG_ATTEMPTS,
};
pub use gquadratic::{gquadratic_search, replay_change, CoordinateChange, Provenance};
pub use lift::{caviglia_lift, verify_lg_lift, verify_lg_lift_to, DEFAULT_LIFT_TRUNCATION};
pub use rank::{min_quadric_rank, quadric_rank, RankScreen, GRID_BOUND};
pub use record::{FiltrationRecord, FlagRecord, QuotientRecord, StepRecord};

pub(crate) use record::Lifter;
