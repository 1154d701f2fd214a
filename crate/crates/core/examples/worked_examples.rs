//! Predicate reports for the two worked examples.

use groupoid_twist::cli::check_report;
use groupoid_twist::fixtures;

fn main() {
    println!("== example 1");
    print!("{}", check_report(&fixtures::three_element_band(), Some(&fixtures::three_element_band_alpha())).to_text());
    println!("== example 2");
    print!("{}", check_report(&fixtures::two_element_swap(), Some(&fixtures::two_element_swap_alpha())).to_text());
}
