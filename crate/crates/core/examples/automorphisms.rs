//! Involutive automorphisms of small groups and their translation classes.

use groupoid_twist::fixtures;
use groupoid_twist::morphisms::{automorphisms, e_fixed_involutive_automorphisms, in_lt, in_rt, involutive_automorphisms};

fn main() {
    for (name, g) in [("Klein four", fixtures::klein_four()), ("S3", fixtures::symmetric3())] {
        println!("== {name}: {} automorphisms", automorphisms(&g).len());
        for a in involutive_automorphisms(&g) {
            println!("  {:?}  LT: {}  RT: {}", a.image(), in_lt(&a, &g), in_rt(&a, &g));
        }
        println!("  idempotent-fixed: {}", e_fixed_involutive_automorphisms(&g).len());
    }
}
