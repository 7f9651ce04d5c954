//! Core double category data structures and fixtures.

pub mod category;
pub mod iso;
pub mod zoo;

pub use category::{FiniteDoubleCategory, HCell, HId, ObjId, SqId, Square, VCell, VId};
pub use iso::is_isomorphic;
