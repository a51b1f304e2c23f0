//! Exact-arithmetic homological algebra at desk scale.
//!
//! The crate builds the standard chain complexes attached to a Lie algebra
//! `g` (Leibniz and Chevalley-Eilenberg) and to a unital associative algebra
//! `A` (Hochschild, Connes' cyclic complex, the `b'` column), together with
//! the mixed complex `(S(g) ⊗ Λ*(g), δ, d)` of Kähler differentials used
//! to compute cyclic homology of an enveloping algebra.  Infinite-dimensional
//! algebras (polynomial vector fields and their enveloping algebra) are cut
//! into finite slices by weight and length gradings; homology of a slice is
//! computed by exact sparse rational linear algebra.
//!
//! Everything is `no_std` + `alloc`; all coefficients are arbitrary-precision
//! rationals and every operation is a pure function, so slices can be built
//! and reduced in parallel by a driver.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod checks;
pub mod complexes;
pub mod exactq;
pub mod liealg;
pub mod maps;
pub mod rational;
pub mod words;

pub use complexes::{ComplexId, GradedSlice, HomologyReport, LieLike};
pub use exactq::SparseMatrix;
pub use liealg::{AssocPresentation, LiePresentation};
pub use rational::Rat;
pub use words::{Chain, Letter, PbwMonomial, Word};
