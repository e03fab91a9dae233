//! Finite permutation groups: closure, conjugacy classes, power maps, coset
//! and orbit machinery, and capped subgroup-class discovery.

mod action;
mod group;
mod perm;
mod subgroups;

pub use action::{class_split_under, verify_subgroup, GroupAction};
pub use group::{enumerate_group, ConjugacyData, PermGroup};
pub use perm::Perm;
pub use subgroups::{close_indices, subgroup_classes, two_generated_subgroups, Subgroup};
