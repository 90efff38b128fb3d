//! Partitions, Young diagrams, standard tableaux and rim-hook data.

mod partition;
mod rim;
mod tableau;

pub use partition::{partitions_of, sub_partitions, Cell, Partition, Var};
pub use rim::{
    empty_core_partitions, is_rim_hook, permutation_sign, r_core_quotient_sign, removable_rim_hooks, rim_hook_core_oracle,
    CoreQuotient, MultiPartition,
};
pub use tableau::{syt_enumerate, StandardTableau};
