//! Sizes of the enumerated construction family.

use groupoid_twist::enumeration::{enumerate_specs, SpecLimits};

fn main() -> groupoid_twist::Result<()> {
    for limits in [SpecLimits::new(1, 4), SpecLimits::new(2, 4), SpecLimits::new(3, 4), SpecLimits::extended(2, 6)] {
        let specs = enumerate_specs(limits)?;
        let largest = specs.iter().map(|s| s.total_order()).max().unwrap_or(0);
        println!(
            "|E| ≤ {}, |G(e)| ≤ {}: {} specs, largest groupoid of order {largest}",
            limits.max_semilattice_order,
            limits.max_group_order,
            specs.len()
        );
    }
    Ok(())
}
