//! Inverses, the canonical automorphism and the regularity predicates.

use groupoid_twist::fixtures;
use groupoid_twist::inverse::{
    antihom_inverse_condition, canonical_alpha, idempotents_form_semilattice, inverse_table, is_completely_inverse,
    is_right_bol, is_strongly_regular,
};

fn main() -> groupoid_twist::Result<()> {
    let g = fixtures::z3_twist();
    let inverses = inverse_table(&g)?;
    let alpha = canonical_alpha(&g)?;
    println!("inverses: {:?}", inverses.as_slice());
    println!("a ↦ a(aa⁻¹): {:?}", alpha.image());
    println!("completely inverse: {}", is_completely_inverse(&g));
    println!("strongly regular: {}", is_strongly_regular(&g));
    println!("right-Bol: {}", is_right_bol(&g));
    println!("E(S) is a semilattice: {}", idempotents_form_semilattice(&g));
    println!("(ab)⁻¹ = (αb⁻¹)(αa⁻¹): {}", antihom_inverse_condition(&g, &alpha)?);
    Ok(())
}
