//! Partitions, semistandard tableaux, strict Gelfand-Tsetlin patterns,
//! staircases and permutations, together with the bijections between them.

mod gt;
mod partition;
mod permutation;
mod staircase;
mod tableau;

pub use gt::{enumerate_strict_gt, GtPattern};
pub use partition::{partitions_in_box, Partition};
pub use permutation::{grassmannian_perm, Permutation};
pub use staircase::{gt_to_staircase, staircase_to_gt, Staircase};
pub use tableau::{enumerate_ssyt, Tableau};
