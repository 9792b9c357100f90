//! Exact kernels for experiments on uniformity phenomena in commutative
//! algebra: monomial ideals and their symbolic powers, integral closures via
//! Newton polyhedra, Artin-Rees data, Hilbert series and graded Betti
//! numbers of monomial quotients, and a small Groebner engine over `Q` and
//! `F_p`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod artin_rees;
pub mod closure;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod resolution;
pub mod ring;
pub mod symbolic;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
pub use monomial::{mono_divides, Minor, Monomial, MonomialIdeal, EXPONENT_CAP};
pub use ring::{Ring, RingRef};
