//! Coxeter matrices, finite-type recognition and the word problem.

pub mod classify;
pub mod elt;
pub mod mask;
pub mod matrix;
pub mod ring;

pub use classify::{classify, is_finite_type, Component, FiniteTypeReport};
pub use elt::CoxElt;
pub use mask::{Mask, MAX_RANK};
pub use matrix::{CoxeterMatrix, TypeLabel, INF};
