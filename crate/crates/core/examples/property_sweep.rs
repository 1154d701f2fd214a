//! A reduced sweep over every registered property.

use groupoid_twist::enumeration::{run_sweep, SpecLimits, SweepConfig};

fn main() -> groupoid_twist::Result<()> {
    let config = SweepConfig { samples: 4096, spec_limits: Some(SpecLimits::new(2, 4)), ..SweepConfig::default() };
    let report = run_sweep(&config)?;
    print!("{}", report.to_text());
    println!("elapsed: {:.2?}", report.elapsed);
    Ok(())
}
