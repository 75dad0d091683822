//! Exact primitives for the symmetric group: permutations, partitions,
//! matchings, and orbit-based transitivity.
//!
//! Points are 0-indexed everywhere in code; all textual formats (cycle
//! notation, pair lists) are 1-indexed to match the usual conventions.

mod matching;
mod partition;
mod perm;
mod transitive;

pub use matching::{all_matchings, Matching};
pub use partition::Partition;
pub use perm::{
    all_involutions, all_permutations, all_transpositions, permutations_with_cycle_type,
    Permutation,
};
pub use transitive::is_transitive;
pub(crate) use transitive::UnionFind;
