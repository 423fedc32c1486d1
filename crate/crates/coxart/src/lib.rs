//! Exact computation in Coxeter groups, 0-Hecke monoids and Artin monoids, with a
//! workbench for homomorphisms between Artin monoids.

pub mod artin;
pub mod burau;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod homs;

pub use artin::{ArtinElt, ArtinGrpElt};
pub use coxeter::{classify, CoxElt, CoxeterMatrix, FiniteTypeReport, Mask, TypeLabel, INF};
pub use error::{Error, Result};
