//! Recovers construction data from a determined table whose elements are not
//! in canonical order, then rebuilds the table.

use groupoid_twist::clifford::{build_determined, decompose};
use groupoid_twist::{Groupoid, Mapping};

fn main() -> groupoid_twist::Result<()> {
    // Z2 = {1, 0} with identity 1, and a zero 2 below it
    let g = Groupoid::from_rows(&[vec![1, 0, 2], vec![0, 1, 2], vec![2, 2, 2]])?;
    let d = decompose(&g, &Mapping::identity(3))?;
    print!("{}", d.spec.to_cspec());
    println!("renumbering: {:?}", d.labels.image());
    let (built, _) = build_determined(&d.spec)?;
    assert_eq!(built.relabel(d.unlabels().image())?, g);
    println!("rebuilt and renumbered back: identical");
    Ok(())
}
