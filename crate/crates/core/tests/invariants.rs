//! Randomized invariants over tables, maps and construction data.

use std::sync::OnceLock;

use proptest::prelude::*;

use groupoid_twist::clifford::{build_determined, build_strong_slg, decompose, ConstructionSpec};
use groupoid_twist::determination::{check_slg_twist, is_semilattice_of_groups};
use groupoid_twist::enumeration::{enumerate_specs, SpecLimits};
use groupoid_twist::inverse::is_completely_inverse;
use groupoid_twist::morphisms::{involutions, is_involutive_automorphism};
use groupoid_twist::{decide, twist, untwist, Groupoid, Mapping};

fn table(max_order: usize) -> impl Strategy<Value = Groupoid> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |t| Groupoid::new(n, t).unwrap())
    })
}

fn table_with_involution(max_order: usize) -> impl Strategy<Value = (Groupoid, Mapping)> {
    table(max_order).prop_flat_map(|g| {
        let all = involutions(g.order());
        (Just(g), prop::sample::select(all))
    })
}

fn table_with_permutation(max_order: usize) -> impl Strategy<Value = (Groupoid, Vec<usize>)> {
    table(max_order).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn specs() -> &'static [ConstructionSpec] {
    static SPECS: OnceLock<Vec<ConstructionSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        let mut all = enumerate_specs(SpecLimits::new(3, 4)).unwrap();
        all.extend(enumerate_specs(SpecLimits::extended(2, 6)).unwrap());
        all
    })
}

fn spec() -> impl Strategy<Value = ConstructionSpec> {
    (0..specs().len()).prop_map(|i| specs()[i].clone())
}

fn spec_with_permutation() -> impl Strategy<Value = (ConstructionSpec, Vec<usize>)> {
    spec().prop_flat_map(|s| {
        let perm = Just((0..s.total_order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(s), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gpd_text_round_trips(g in table(6)) {
        prop_assert_eq!(Groupoid::parse_gpd(&g.to_gpd()).unwrap(), g);
    }

    #[test]
    fn map_text_round_trips((_, f) in table_with_involution(6)) {
        prop_assert_eq!(Mapping::parse_map(&f.to_map_text()).unwrap(), f);
    }

    #[test]
    fn twist_and_untwist_are_inverse((g, f) in table_with_involution(6)) {
        prop_assert_eq!(twist(&untwist(&g, &f).unwrap(), &f).unwrap(), g.clone());
        prop_assert_eq!(untwist(&twist(&g, &f).unwrap(), &f).unwrap(), g);
    }

    #[test]
    fn twisting_transfers_involutive_automorphisms((g, f) in table_with_involution(5)) {
        let star = untwist(&g, &f).unwrap();
        prop_assert_eq!(is_involutive_automorphism(&f, &g), is_involutive_automorphism(&f, &star));
    }

    #[test]
    fn decision_is_invariant_under_renumbering((g, perm) in table_with_permutation(4)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(decide(&g).determined, decide(&h).determined);
    }

    #[test]
    fn decision_never_alarms(g in table(4)) {
        let report = decide(&g);
        prop_assert!(report.alarms.is_empty(), "{:?}", report.alarms);
        prop_assert_eq!(report.determined, report.witness.is_some());
    }

    #[test]
    fn cspec_text_round_trips(s in spec()) {
        prop_assert_eq!(ConstructionSpec::parse_cspec(&s.to_cspec()).unwrap(), s);
    }

    #[test]
    fn built_groupoids_are_determined_and_decompose_back(s in spec()) {
        let (g, alpha) = build_determined(&s).unwrap();
        let strong = build_strong_slg(&s).unwrap();
        prop_assert!(is_semilattice_of_groups(&strong));
        prop_assert!(is_completely_inverse(&g));
        prop_assert!(decide(&g).determined);
        prop_assert!(check_slg_twist(&g, &strong, &alpha).unwrap().all_hold());
        let d = decompose(&g, &alpha).unwrap();
        prop_assert_eq!(d.spec, s);
        prop_assert!(d.labels.is_identity());
    }

    #[test]
    fn renumbered_builds_decompose_to_the_same_table((s, perm) in spec_with_permutation()) {
        let (g, alpha) = build_determined(&s).unwrap();
        let n = g.order();
        let h = g.relabel(&perm).unwrap();
        let mut moved = vec![0; n];
        for x in 0..n {
            moved[perm[x]] = perm[alpha.apply(x)];
        }
        let d = decompose(&h, &Mapping::new(moved)).unwrap();
        let (built, _) = build_determined(&d.spec).unwrap();
        prop_assert_eq!(built.relabel(d.unlabels().image()).unwrap().to_gpd(), h.to_gpd());
    }
}
