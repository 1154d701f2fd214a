//! Exhaustive and seeded generation of groupoids and construction data, and
//! the property sweep built on them.

mod properties;
mod specs;
mod sweep;
mod tables;

pub use specs::{
    enumerate_specs, groups, semilattices, SpecLimits, MAX_EXTENDED_GROUP_ORDER, MAX_GROUP_ORDER,
    MAX_SEMILATTICE_ORDER,
};
pub use tables::{
    enumerate_groupoids, random_groupoid_range, random_groupoids, table_at, table_count, GENERATOR,
    MAX_EXHAUSTIVE_ORDER, SAMPLE_BLOCK,
};
pub use properties::{
    builtin_properties, golden_instances, Instance, Outcome, Property, Source, Suite, EXAMPLE_ONE, EXAMPLE_TWO,
    NEGATION_TWIST,
};
pub use sweep::{run_sweep, run_sweep_with, Counterexample, PropertyCounts, SweepConfig, SweepReport};
