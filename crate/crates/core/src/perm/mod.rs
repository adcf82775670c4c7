//! Permutations, permutation groups and their actions.

mod action;
mod affine;
mod group;
mod permutation;
pub mod registry;

pub use action::{
    binomial, is_k_homogeneous, orbits, pair_action, pair_at, pair_index, rank_on, Action,
    FiniteAction, NaturalAction, SubsetAction, MAX_SUBSET_DOMAIN,
};
pub use affine::{AffineGroup, MAX_EXPLICIT_DOMAIN};
pub use group::PermGroup;
pub use permutation::Permutation;
pub use registry::NamedGroup;
