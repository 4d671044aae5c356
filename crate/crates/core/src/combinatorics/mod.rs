//! Partitions, conjugacy classes of C_k ≀ S_n, p-regularity and the special
//! partition families.

mod class;
mod families;
mod partition;

pub use class::{
    class_iter, class_representative, classes, is_p_regular, ClassLabel, MonomialMatrix,
};
pub use families::{a_count, a_set, w_count, w_set, x_set, FamilyKind, PartitionFamily};
pub use partition::{colored_partition_count, partitions, Partition};

pub use crate::arith::r_p;
