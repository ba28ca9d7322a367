//! Characteristic-p computer algebra centered on Frobenius splittings.
//!
//! The crate provides exact arithmetic over prime fields, Buchberger's
//! algorithm with cofactor tracking, ideal-level operations (intersection,
//! quotient, saturation, Frobenius powers, dimension), the trace map and
//! splitting/compatibility verification, geometric vertex decomposition,
//! and a lifting construction that turns a splitting compatibly splitting
//! the link and deletion of a decomposition into one compatibly splitting
//! the decomposed ideal, emitting machine-checkable certificates.
//!
//! Builders for the standard example families (2×n maximal minors, toric
//! ideals of graphs, double determinantal ideals) live in
//! [`constructions`], and end-to-end reproduction scenarios in [`repro`].
//!
//! Data-parallel inner loops (brute-force compatibility grids, per-generator
//! membership checks, minor generation) use rayon when the default
//! `parallel` feature is enabled and fall back to sequential execution
//! otherwise.

pub mod constructions;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod gvd;
pub mod ideal;
pub mod lift;
pub mod monomial;
pub mod order;
mod par;
pub mod parse;
pub mod poly;
pub mod repro;
pub mod ring;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Polynomial;
pub use ring::Ring;
