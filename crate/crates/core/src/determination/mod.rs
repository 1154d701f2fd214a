//! The twist correspondence, `AD(X)` membership, and the decision procedure
//! for groupoids determined by semilattices of groups.

mod claims;
mod decide;
mod membership;
mod twist;

pub use claims::{
    check_inclusions, check_semigroup_twist, check_slg_twist, ClaimCheck, InclusionReport,
    SemigroupTwistReport, SlgTwistReport,
};
pub use decide::{check_witness, decide, Criterion, DecisionReport, Verdict, Witness, WitnessCheck};
pub use membership::{ad_membership_characterized, ad_membership_direct, ad_witnesses, ad_witnesses_among};
pub use twist::{twist, untwist};

use crate::groupoid::Groupoid;

/// A semigroup that is a union of groups whose idempotents commute: every
/// `a` lies in `(S·a²) ∩ (a²·S)`.
pub fn is_semilattice_of_groups(g: &Groupoid) -> bool {
    if !g.is_associative() {
        return false;
    }
    let union_of_groups = g.elements().all(|a| {
        let a2 = g.product(a, a);
        g.elements().any(|s| g.product(s, a2) == a) && g.elements().any(|s| g.product(a2, s) == a)
    });
    if !union_of_groups {
        return false;
    }
    let e = g.idempotents();
    let commute = e.iter().all(|x| e.iter().all(|y| g.product(x, y) == g.product(y, x)));
    commute
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::morphisms::Mapping;

    #[test]
    fn twist_of_z3_by_negation() {
        let g = twist(&Groupoid::cyclic(3), &fixtures::negation(3)).unwrap();
        assert_eq!(g.rows(), vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]);
        assert_eq!(g, fixtures::z3_twist());
        assert_eq!(untwist(&g, &fixtures::negation(3)).unwrap(), Groupoid::cyclic(3));
    }

    #[test]
    fn twist_by_identity_is_identity() {
        for g in [fixtures::two_chain(), fixtures::three_element_band(), Groupoid::cyclic(4)] {
            let id = Mapping::identity(g.order());
            assert_eq!(twist(&g, &id).unwrap(), g);
            assert_eq!(untwist(&g, &id).unwrap(), g);
        }
        let band = fixtures::three_element_band();
        let swap = fixtures::three_element_band_alpha();
        assert_eq!(untwist(&twist(&band, &swap).unwrap(), &swap).unwrap(), band);
    }

    #[test]
    fn twist_rejects_non_involutions() {
        let g = Groupoid::cyclic(3);
        assert_eq!(twist(&g, &Mapping::new(vec![1, 2, 0])), Err(crate::Error::NotInvolution { order: 3 }));
        assert!(untwist(&g, &Mapping::identity(2)).is_err());
    }

    #[test]
    fn semilattices_of_groups() {
        assert!(is_semilattice_of_groups(&Groupoid::cyclic(3)));
        assert!(is_semilattice_of_groups(&fixtures::two_chain()));
        assert!(!is_semilattice_of_groups(&fixtures::three_element_band()));
        assert!(!is_semilattice_of_groups(&fixtures::z3_twist()));
        // Z2 with a zero adjoined
        let g = Groupoid::from_fn(3, |x, y| if x == 2 || y == 2 { 2 } else { (x + y) % 2 }).unwrap();
        assert!(is_semilattice_of_groups(&g));
    }
}
