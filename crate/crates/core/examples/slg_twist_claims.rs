//! The consequences of twisting a semilattice of groups, on S3 twisted by
//! each of its involutive automorphisms.

use groupoid_twist::determination::check_slg_twist;
use groupoid_twist::fixtures;
use groupoid_twist::morphisms::involutive_automorphisms;
use groupoid_twist::twist;

fn main() -> groupoid_twist::Result<()> {
    let s3 = fixtures::symmetric3();
    for alpha in involutive_automorphisms(&s3) {
        let g = twist(&s3, &alpha)?;
        let report = check_slg_twist(&g, &s3, &alpha)?;
        println!("α = {:?}: {} of {} hold", alpha.image(), report.items.iter().filter(|c| c.holds).count(), report.items.len());
        for c in &report.items {
            println!("  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.claim);
        }
    }
    Ok(())
}
