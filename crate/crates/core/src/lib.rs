//! Verification of algebraic identities on finite structures given by
//! Cayley tables, with generators for the reductions that make the cubic
//! cases hard.

pub mod algebra;
pub mod cli;
pub mod detect;
pub mod expr;
pub mod field;
pub mod matrix;
pub mod reduce;
pub mod structure;
pub mod verify;
