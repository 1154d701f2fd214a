//! Exhaustive and seeded random streams of tables.

use groupoid_twist::enumeration::{enumerate_groupoids, random_groupoids, GENERATOR};

fn main() -> groupoid_twist::Result<()> {
    for n in 1..=3 {
        let (all, semigroups) = enumerate_groupoids(n, false)?.fold((0, 0), |(all, sg), g| {
            (all + 1, sg + usize::from(g.is_associative()))
        });
        println!("order {n}: {all} tables, {semigroups} associative");
    }
    println!("generator: {GENERATOR}");
    let associative = random_groupoids(4, 10_000, 1).filter(|g| g.is_associative()).count();
    println!("order 4: {associative} of 10000 seeded samples are associative");
    Ok(())
}
