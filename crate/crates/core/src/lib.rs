//! Random access into the enumeration orders of five combinatorial families.
//!
//! Every family maps a 1-based [`Serial`] to an object ("unrank") and back
//! ("rank") without generating the objects in between:
//!
//! | family | object | count |
//! |---|---|---|
//! | [`permutation`] | permutation of `{1..m}` | `m!` |
//! | [`composition`] | `k` non-negative parts summing to `n` | `C(n+k-1, n)` |
//! | [`setpartition`] | restricted growth string of length `n` | `B_n` |
//! | [`ksubset`] | `k`-subset of `{1..n}`, lexicographic | `C(n, k)` |
//! | [`subset`] | 0/1 mask over `{1..n}`, Gray order | `2^n` |
//!
//! All counts and serials are arbitrary-precision integers.

pub mod composition;
pub mod error;
pub mod ksubset;
pub mod numerics;
pub mod permutation;
pub mod serial;
pub mod setpartition;
pub mod subset;

pub use composition::{count_compositions, rank_composition, unrank_composition, Composition};
pub use error::{Error, Result};
pub use ksubset::{count_ksubsets, generate_ksubsets_lex, rank_ksubset, unrank_ksubset, KSubset};
pub use permutation::{
    count_permutations, offset_to_permutation, offset_to_serial, permutation_to_offset,
    rank_permutation, serial_to_offset, unrank_permutation, OffsetVector, Permutation,
};
pub use serial::{Count, Serial};
pub use setpartition::{
    build_d_matrix, count_setpartitions, rank_setpartition, stylize, unrank_setpartition, DMatrix,
    PartitionVector,
};
pub use subset::{count_subsets, rank_subset, unrank_subset, SubsetMask};
