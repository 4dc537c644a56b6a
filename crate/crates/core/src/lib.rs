//! Exact computational workbench for connected graded algebras presented by
//! generators and relations: noncommutative Gröbner bases via the diamond
//! lemma, Hilbert series of the quotients, verification of free complexes,
//! homology of graded Lie algebras, and numerical classification of
//! resolution shapes in global dimension five.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere in the crate.

pub mod bettienum;
pub mod complexcheck;
pub mod diamond;
mod error;
pub mod hilbert;
pub mod liealg;
mod linalg;
pub mod ncpoly;
#[cfg(test)]
pub(crate) mod testsupport;

pub use error::{Error, Result};
pub use ncpoly::{GeneratorTable, MonomialOrder, NcPoly, OrderKind, Word};
