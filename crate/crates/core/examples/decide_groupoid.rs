//! Runs the decision procedure on a positive and a negative table.

use groupoid_twist::{decide, fixtures};

fn main() {
    for (name, g) in [("z3 negation twist", fixtures::z3_twist()), ("three-element band", fixtures::three_element_band())] {
        let report = decide(&g);
        println!("== {name}");
        print!("{}", report.to_text());
    }
}
