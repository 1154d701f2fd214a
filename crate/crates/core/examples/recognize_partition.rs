//! Finds the twisted-group partition of a table directly, without untwisting.

use groupoid_twist::clifford::find_twisted_group_partition;
use groupoid_twist::fixtures;

fn main() {
    for (name, g) in [("z3 negation twist", fixtures::z3_twist()), ("two-element swap", fixtures::two_element_swap())] {
        match find_twisted_group_partition(&g) {
            Some(p) => println!("{name}: classes {:?}, α {:?}", p.class_of, p.alpha.image()),
            None => println!("{name}: no partition"),
        }
    }
}
