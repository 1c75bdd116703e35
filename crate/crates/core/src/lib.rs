//! Homological chordality for finite simplicial complexes.

pub mod chordality;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod cuts;
pub mod dirac;
pub mod error;
pub mod face;
pub mod format;
pub mod field;
pub mod chain;
pub mod homology;
pub mod linalg;

pub use chain::Chain;
pub use complex::{RelativeComplex, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use field::{Field, FieldSpec, PrimeField, Rat, Rationals};
