//! Builds a determined groupoid from construction data: Z2 twisted by its
//! identity above a trivial group, joined by the only possible map.

use groupoid_twist::clifford::{build_determined, build_strong_slg, ConstructionSpec};

const SPEC: &str = "\
semilattice 2
0 0
0 1
group 0 1
0
alpha 0
0
group 1 2
0 1
1 0
alpha 1
0 1
hom 1 0
0 0
";

fn main() -> groupoid_twist::Result<()> {
    let spec: ConstructionSpec = SPEC.parse()?;
    println!("strong semilattice of groups:\n{}", build_strong_slg(&spec)?.to_gpd());
    let (g, alpha) = build_determined(&spec)?;
    println!("determined groupoid:\n{}", g.to_gpd());
    println!("glued α: {:?}", alpha.image());
    Ok(())
}
