//! Hilbert series, Betti tables and the invariants read off from them, for
//! quotients of a polynomial ring by a monomial ideal.

pub mod betti;
pub mod hilbert;

pub use betti::{
    graded_betti, graded_betti_capped, is_cohen_macaulay, proj_dim, pure_resolution_multiplicity, regularity,
    stillman_monomial_check, verify_betti_hilbert_identity, BettiTable, HomologyField, PureMultiplicity,
    DEFAULT_GENERATOR_CAP,
};
pub use hilbert::{
    dimension_multiplicity, hilbert_function, hilbert_polynomial, hilbert_series, HilbertPolynomial, HilbertSeries,
};
