//! Graded Betti tables of shifted monomial curve ideals, computed
//! combinatorially from squarefree divisor simplicial complexes and exact
//! simplicial homology, together with executable checks for the periodicity,
//! separation, double-cone and deletion statements that govern them.
//!
//! The pipeline: a strictly increasing exponent sequence `a` defines a
//! monomial curve; shifting it by `j` and homogenizing yields semigroups
//! whose divisor complexes carry all Betti numbers. [`semigroup`] holds the
//! scalar arithmetic, [`membership`] the representability engines,
//! [`simplicial`]/[`divisor`] the complexes and their homology, [`betti`]
//! the table assembly, and [`verify`] the structural checks.

pub mod betti;
pub mod cli;
pub mod divisor;
mod error;
pub mod membership;
pub mod semigroup;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
pub use semigroup::{CurveSequence, ShiftedCurve};
pub use simplicial::{FieldSpec, HomologyVector, SimplicialComplex};
