//! Membership in `AD(X)`: groupoids determined by some `{S, *} ∈ X` and an
//! involutive automorphism of `{S, *}`.
//!
//! Two independent routes are provided. [`ad_membership_direct`] untwists by
//! every involution and tests the star groupoid against `X`;
//! [`ad_membership_characterized`] evaluates the intrinsic condition list for
//! `X` on the input groupoid itself.

use crate::groupoid::Groupoid;
use crate::inverse::satisfies_triple_law;
use crate::morphisms::{involutions, involutive_automorphisms, is_homomorphism, Mapping};
use crate::variety::{satisfies_variety, VarietyId};

use super::twist::untwist;

/// Every involution `α` (lexicographic) such that `untwist(G, α) ∈ X` and
/// `α ∈ AUT²(untwist(G, α))`.
pub fn ad_witnesses(g: &Groupoid, class: VarietyId) -> Vec<Mapping> {
    involutions(g.order())
        .into_iter()
        .filter(|alpha| {
            let star = untwist(g, alpha).expect("involutions are valid twists");
            satisfies_variety(&star, class) && is_homomorphism(alpha, &star, &star)
        })
        .collect()
}

/// [`ad_witnesses`] restricted to `candidates`.
///
/// An involution lies in `AUT²(untwist(G, α))` exactly when it lies in
/// `AUT²(G)`, so passing `AUT²(G)` yields the same list as [`ad_witnesses`]
/// while avoiding the scan over every involution.
pub fn ad_witnesses_among(g: &Groupoid, class: VarietyId, candidates: &[Mapping]) -> Vec<Mapping> {
    candidates
        .iter()
        .filter(|alpha| {
            let star = untwist(g, alpha).expect("candidates are involutions");
            satisfies_variety(&star, class) && is_homomorphism(alpha, &star, &star)
        })
        .cloned()
        .collect()
}

/// The first involution `α` witnessing `G ∈ AD(X)` by definition.
pub fn ad_membership_direct(g: &Groupoid, class: VarietyId) -> Option<Mapping> {
    involutions(g.order()).into_iter().find(|alpha| {
        let star = untwist(g, alpha).expect("involutions are valid twists");
        satisfies_variety(&star, class) && is_homomorphism(alpha, &star, &star)
    })
}

/// Decides `G ∈ AD(X)` from conditions on `G` alone.
///
/// For `L0` the search runs over all involutions; for `R0`, `IR0` and `GR0`
/// membership coincides with membership in the class itself and the identity
/// is returned as witness; every other class searches `AUT²(G)`.
pub fn ad_membership_characterized(g: &Groupoid, class: VarietyId) -> Option<Mapping> {
    use VarietyId::*;
    let n = g.order();
    let p = |a, b| g.product(a, b);
    let all_pairs = |pred: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| pred(x, y)));
    let all_triples = |pred: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| pred(x, y, z))))
    };

    match class {
        R0 | IR0 | GR0 => return satisfies_variety(g, class).then(|| Mapping::identity(n)),
        L0 => {
            return involutions(n)
                .into_iter()
                .find(|a| all_pairs(&|x, y| p(x, y) == a.apply(x)))
        }
        _ => {}
    }

    involutive_automorphisms(g).into_iter().find(|a| {
        let al = |x| a.apply(x);
        let fixes_by_product = || (0..n).all(|x| p(x, al(x)) == al(x));
        match class {
            B => satisfies_triple_law(g, a) && fixes_by_product(),
            RB => {
                satisfies_triple_law(g, a)
                    && fixes_by_product()
                    && all_pairs(&|x, y| p(p(x, y), x) == x)
            }
            IB => {
                satisfies_triple_law(g, a)
                    && all_pairs(&|x, y| p(x, y) == p(p(al(x), x), p(al(y), y)))
            }
            IL0 => satisfies_triple_law(g, a) && all_triples(&|x, y, z| p(x, y) == p(x, z)),
            IRB => all_triples(&|x, y, z| {
                let lhs = p(p(x, y), z);
                lhs == p(al(x), p(y, z)) && lhs == p(al(x), z)
            }),
            GB => {
                satisfies_triple_law(g, a)
                    && all_pairs(&|x, y| {
                        let xy = p(x, y);
                        xy == p(al(xy), xy) || xy == p(p(xy, x), y)
                    })
            }
            GL0 => all_triples(&|x, y, z| {
                let lhs = p(p(x, y), z);
                lhs == p(al(x), p(y, z)) && lhs == p(al(x), al(y))
            }),
            GRB => {
                satisfies_triple_law(g, a)
                    && all_triples(&|x, y, z| {
                        let xy = p(x, y);
                        xy == p(p(xy, al(z)), xy)
                    })
            }
            R0 | IR0 | GR0 | L0 => unreachable!(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn right_zero_is_determined_by_itself() {
        let g = fixtures::right_zero(2);
        assert_eq!(ad_membership_direct(&g, VarietyId::R0), Some(Mapping::identity(2)));
        assert_eq!(ad_membership_characterized(&g, VarietyId::R0), Some(Mapping::identity(2)));
    }

    #[test]
    fn swap_groupoid_is_determined_by_a_left_zero_band() {
        let g = fixtures::two_element_swap();
        let swap = fixtures::two_element_swap_alpha();
        assert_eq!(ad_membership_direct(&g, VarietyId::B), Some(swap.clone()));
        assert_eq!(ad_membership_characterized(&g, VarietyId::B), Some(swap));
        assert_eq!(ad_membership_direct(&g, VarietyId::R0), None);
    }

    #[test]
    fn one_element_groupoid_is_in_every_class() {
        let g = Groupoid::cyclic(1);
        for class in VarietyId::ALL {
            assert_eq!(ad_membership_direct(&g, class), Some(Mapping::identity(1)), "{class}");
            assert_eq!(ad_membership_characterized(&g, class), Some(Mapping::identity(1)), "{class}");
        }
    }

    #[test]
    fn inflated_right_zero_is_recognized() {
        // right-zero {0, 1} inflated by 2 ↦ 1: xy = (y mod-collapse)
        let g = Groupoid::from_fn(3, |_, y| if y == 2 { 1 } else { y }).unwrap();
        assert!(satisfies_variety(&g, VarietyId::IR0));
        assert!(ad_membership_direct(&g, VarietyId::IR0).is_some());
        assert!(ad_membership_characterized(&g, VarietyId::IR0).is_some());
    }

    #[test]
    fn band_fixture_is_not_in_ad_rb() {
        let g = fixtures::three_element_band();
        assert_eq!(ad_membership_direct(&g, VarietyId::RB), None);
        assert_eq!(ad_membership_characterized(&g, VarietyId::RB), None);
    }

    #[test]
    fn restricted_witnesses_match_the_full_scan() {
        for g in [fixtures::two_element_swap(), fixtures::right_zero(3), fixtures::three_element_band()] {
            let aut2 = involutive_automorphisms(&g);
            for class in VarietyId::ALL {
                assert_eq!(ad_witnesses_among(&g, class, &aut2), ad_witnesses(&g, class), "{class}");
            }
        }
    }

    #[test]
    fn left_zero_twist_by_swap() {
        // xy = αx for the swap: determined by the left-zero semigroup
        let g = fixtures::two_element_swap();
        assert_eq!(ad_membership_characterized(&g, VarietyId::L0), Some(Mapping::new(vec![1, 0])));
        assert_eq!(ad_membership_direct(&g, VarietyId::L0), Some(Mapping::new(vec![1, 0])));
    }
}
