//! Homomorphisms of Hecke and Artin monoids: verification, constructions, the family
//! catalog, exhaustive search and counting.

pub mod catalog;
pub mod conjecture;
pub mod construct;
pub mod count;
pub mod hecke_hom;
pub mod search;
pub mod spec;

pub use catalog::{catalog, verification_instances, CatalogEntry, FAMILIES};
pub use construct::{
    artin_parabolic_projection, decoration_check, fold, folded_matrix, tits_hom, tits_target, DecorationVerdict,
};
pub use count::{count_enumerate, count_formula, COUNT_FAMILIES};
pub use hecke_hom::HeckeHomSpec;
pub use search::{standard_hom_search, SearchHit, SearchOptions};
pub use spec::{
    artin_hom_check, artin_hom_check_words, b_min, compose, hom_type_classify, ArtinHomSpec, EdgeVerdict, TypeFlags,
};
