//! Groupoids determined by strong semilattices of groups, built from
//! Clifford-style data and decomposed back into it.

mod build;
mod recognize;
mod spec;

pub use build::{build_determined, build_strong_slg, decompose, glued_alpha, Decomposition};
pub use recognize::{find_twisted_group_partition, is_twisted_group_partition, TwistedGroupPartition};
pub use spec::{
    validate_spec, ConstructionSpec, GroupSpec, HomSystem, MeetSemilattice, SpecCondition, SpecValidation,
    SpecViolation,
};
