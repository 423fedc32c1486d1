//! Artin monoids in Garside normal form, their groups of fractions in finite type,
//! and special braids of type `A`.

mod group;
mod monoid;
pub mod typea;

pub use group::ArtinGrpElt;
pub use monoid::ArtinElt;
pub use typea::{transposition, tj_data, IntervalSetJ, TjData};
