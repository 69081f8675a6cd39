//! Hilbert series, Krull dimension, truncated minimal free resolutions and
//! the finite Koszulness probes.

mod dimension;
mod hilbert;
mod probes;
mod resolution;

pub use dimension::{codim, krull_dim, krull_dim_with, monomial_krull_dim};
pub use hilbert::{hilbert_series, monomial_hilbert_series, monomial_k_polynomial, HilbertSeries};
pub use probes::{
    inverse_series_at_minus_z, koszul_probe, koszul_probe_from_table, poincare_prefix,
    poincare_prefix_from_table, series_koszul_test, series_koszul_test_checked, PoincarePrefix,
    DEFAULT_D_MAX, DEFAULT_I_MAX,
};
pub use resolution::{minimal_resolution, BettiEntry, BettiTable, GradedQuotient, Subject};
