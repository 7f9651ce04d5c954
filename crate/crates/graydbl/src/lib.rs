//! Finite double categories and the machinery around their lax Gray-style
//! monoidal structure: hom double categories of double functors and
//! pseudotransformations, canonical evaluation/coevaluation functors, a
//! bounded tensor-product realization engine with coherence checkers,
//! 2-categorical comparison functors, monads in double categories, and
//! monoid-style interchange data validation.
//!
//! Everything is table-driven and exhaustively checkable: categories are
//! finite, compositions are explicit tables, and every law has a checker that
//! either certifies it or names the offending cells.

pub mod budget;
pub mod dbl;
pub mod functor;
pub mod gray;
pub mod hom;
pub mod canonical;
pub mod two;
pub mod mnd;
pub mod monoid;
pub mod error;

pub use budget::Budget;
pub use error::{AxiomFailure, Error, Result};
