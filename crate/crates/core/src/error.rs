use alloc::string::String;

use crate::orbit::GroupKind;

/// Errors raised by the partition, orbit, PL and derivative operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("partitions of different weight cannot be compared ({left} vs {right})")]
    UnequalWeight { left: u32, right: u32 },

    #[error("enumeration of size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },

    #[error("parts must be positive and weakly decreasing")]
    NotDecreasing,

    #[error("malformed partition {0:?}")]
    Parse(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("orbits belong to different groups ({0} vs {1})")]
    GroupMismatch(GroupKind, GroupKind),

    #[error("closure order between distinct very even SO orbits {0} and {1} is not determined")]
    LabelOrderUndefined(String, String),

    #[error("partition {partition} does not label an orbit of {group}")]
    InvalidPartition { group: GroupKind, partition: String },

    #[error("orbit label: {0}")]
    InvalidLabel(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation not defined for {0}")]
    UnsupportedGroup(GroupKind),

    #[error("inconsistent PL set: {0}")]
    InconsistentSet(String),

    #[error("empty composition")]
    EmptyComposition,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("integer overflow in matrix arithmetic")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
