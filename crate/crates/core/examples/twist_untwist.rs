//! Twists Z3 by negation and recovers the group again.

use groupoid_twist::{fixtures, twist, untwist, Groupoid};

fn main() -> groupoid_twist::Result<()> {
    let z3 = Groupoid::cyclic(3);
    let negation = fixtures::negation(3);
    let twisted = twist(&z3, &negation)?;
    println!("Z3:\n{}", z3.to_gpd());
    println!("xy = (-x) + y:\n{}", twisted.to_gpd());
    println!("associative: {}", twisted.is_associative());
    assert_eq!(untwist(&twisted, &negation)?, z3);
    println!("untwisting by negation gives Z3 back");
    Ok(())
}
