//! Permutations of `{1..2n}` and the pieces of the diagram encoding built on
//! them: cycle types, perfect matchings, and joint transitivity.

mod cycle_type;
mod matching;
mod permutation;
mod union_find;

pub use cycle_type::CycleType;
pub use matching::{Matching, Matchings};
pub use permutation::Permutation;
pub use union_find::{is_transitive, UnionFind};
