//! Which twelve classes a table, or a twist of a table, belongs to.

use groupoid_twist::determination::{ad_membership_characterized, ad_membership_direct};
use groupoid_twist::variety::satisfies_variety;
use groupoid_twist::{fixtures, VarietyId};

fn main() {
    for (name, g) in [("example 1", fixtures::three_element_band()), ("example 2", fixtures::two_element_swap())] {
        println!("== {name}");
        for x in VarietyId::ALL {
            let direct = ad_membership_direct(&g, x);
            assert_eq!(direct.is_some(), ad_membership_characterized(&g, x).is_some());
            println!(
                "  {x:>3} ({}): member {}, determined by a member via {:?}",
                x.identity_text(),
                satisfies_variety(&g, x),
                direct.map(|a| a.into_image())
            );
        }
    }
}
