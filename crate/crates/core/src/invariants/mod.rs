//! Graph matching numbers, edgewise domination of hypergraphs, and the
//! facet-subcomplex regularity bound `b`.

mod b_invariant;
mod domination;
mod matching;

pub use b_invariant::{b_invariant, b_invariant_with, BInvariant};
pub use domination::{epsilon, is_edgewise_dominant, Epsilon};
pub use matching::{matching_numbers, MatchingNumbers};
