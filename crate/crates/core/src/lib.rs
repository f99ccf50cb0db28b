//! Soliton cellular automata built from Kirillov-Reshetikhin crystals `B_l`,
//! their combinatorial R-matrix and energy function.

pub mod algebra;
pub mod automaton;
pub mod crystal;
pub mod error;
pub mod golden;
pub mod natural;
pub mod reduction;
pub mod row;

pub use algebra::{Algebra, Classical, Family, Letter, TypeClass};
pub use error::{Error, Result};
pub use row::Row;
pub mod rmatrix;
pub mod soliton;
pub mod sweep;
pub mod verify;
