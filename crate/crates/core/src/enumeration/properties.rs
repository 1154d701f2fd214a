//! The registered properties checked by the sweep, grouped into suites.
//!
//! Every property is a filtered universal: it inspects one instance, checks
//! its conclusion wherever the hypotheses hold, and reports `Vacuous` when
//! they never do.

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

use crate::clifford::{
    build_determined, build_strong_slg, decompose, find_twisted_group_partition, is_twisted_group_partition,
    ConstructionSpec, Decomposition, TwistedGroupPartition,
};
use crate::determination::{
    check_inclusions, check_semigroup_twist, check_slg_twist, decide, is_semilattice_of_groups, twist, untwist,
    ad_membership_characterized, ad_membership_direct, Criterion, DecisionReport,
};
use crate::fixtures;
use crate::groupoid::{Element, Groupoid};
use crate::inverse::{
    antihom_inverse_condition, canonical_alpha, idempotents_form_semilattice, inverse_table, is_completely_inverse,
    is_right_bol, is_strongly_regular, satisfies_triple_law, InverseTable,
};
use crate::morphisms::{
    in_lt, in_rt, involutions, involutive_automorphisms, is_homomorphism, is_involutive_automorphism, Mapping,
};
use crate::variety::{satisfies_variety, square_in_base, VarietyId};

/// Where an instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// A fixed table with facts asserted about it by hand.
    Golden,
    /// Every table of a small order.
    Exhaustive,
    /// Seeded uniform random tables.
    Sampled,
    /// Built from enumerated construction data; always determined.
    Constructed,
}

/// A named group of properties, selectable in a sweep configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Goldens,
    Identities,
    Membership,
    Involutions,
    Inverse,
    Decision,
    SlgTwist,
    Construction,
    Inclusions,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Goldens,
        Suite::Identities,
        Suite::Membership,
        Suite::Involutions,
        Suite::Inverse,
        Suite::Decision,
        Suite::SlgTwist,
        Suite::Construction,
        Suite::Inclusions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Goldens => "goldens",
            Suite::Identities => "identities",
            Suite::Membership => "membership",
            Suite::Involutions => "involutions",
            Suite::Inverse => "inverse",
            Suite::Decision => "decision",
            Suite::SlgTwist => "slg_twist",
            Suite::Construction => "construction",
            Suite::Inclusions => "inclusions",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One groupoid under test, with lazily computed facts shared by all
/// properties.
pub struct Instance {
    pub source: Source,
    /// Set for golden instances.
    pub label: Option<&'static str>,
    pub groupoid: Groupoid,
    /// The golden `α`, or the glued `α` of a constructed instance.
    pub alpha: Option<Mapping>,
    pub spec: Option<ConstructionSpec>,
    decision: OnceCell<DecisionReport>,
    aut2: OnceCell<Vec<Mapping>>,
    inverses: OnceCell<Option<InverseTable>>,
}

impl Instance {
    pub fn new(source: Source, groupoid: Groupoid) -> Self {
        Instance {
            source,
            label: None,
            groupoid,
            alpha: None,
            spec: None,
            decision: OnceCell::new(),
            aut2: OnceCell::new(),
            inverses: OnceCell::new(),
        }
    }

    pub fn golden(label: &'static str, groupoid: Groupoid, alpha: Mapping) -> Self {
        Instance { label: Some(label), alpha: Some(alpha), ..Instance::new(Source::Golden, groupoid) }
    }

    /// Builds the determined groupoid of a valid spec.
    pub fn constructed(spec: ConstructionSpec) -> crate::Result<Self> {
        let (groupoid, alpha) = build_determined(&spec)?;
        Ok(Instance { alpha: Some(alpha), spec: Some(spec), ..Instance::new(Source::Constructed, groupoid) })
    }

    pub fn decision(&self) -> &DecisionReport {
        self.decision.get_or_init(|| decide(&self.groupoid))
    }

    /// Whether the instance is determined, if the decision was already
    /// computed.
    pub fn decided(&self) -> Option<bool> {
        self.decision.get().map(|d| d.determined)
    }

    pub fn aut2(&self) -> &[Mapping] {
        self.aut2.get_or_init(|| involutive_automorphisms(&self.groupoid))
    }

    pub fn inverses(&self) -> Option<&InverseTable> {
        self.inverses.get_or_init(|| inverse_table(&self.groupoid).ok()).as_ref()
    }

    /// The `α` a determined instance is built from: the glued `α` when
    /// constructed, otherwise the decision witness.
    pub fn determining_alpha(&self) -> Option<Mapping> {
        match self.source {
            Source::Constructed => self.alpha.clone(),
            _ => self.decision().witness.as_ref().map(|w| w.alpha.clone()),
        }
    }
}

/// The result of checking one property on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The hypotheses never held.
    Vacuous,
    Holds,
    Fails { witness: Vec<Element>, detail: String },
}

impl Outcome {
    pub fn fails(witness: Vec<Element>, detail: impl Into<String>) -> Self {
        Outcome::Fails { witness, detail: detail.into() }
    }

    /// `Holds` or a failure with `witness`, depending on `ok`.
    pub fn check(ok: bool, witness: impl FnOnce() -> Vec<Element>, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails { witness: witness(), detail: detail() }
        }
    }

    /// `Vacuous` unless `hypothesis`, then as [`Outcome::check`].
    pub fn implies(
        hypothesis: bool,
        conclusion: impl FnOnce() -> bool,
        witness: impl FnOnce() -> Vec<Element>,
        detail: impl FnOnce() -> String,
    ) -> Self {
        if !hypothesis {
            return Outcome::Vacuous;
        }
        Outcome::check(conclusion(), witness, detail)
    }
}

/// Combines per-item outcomes: the first failure wins, otherwise `Holds` if
/// any item was non-vacuous.
fn all<T>(items: impl IntoIterator<Item = T>, mut check: impl FnMut(T) -> Outcome) -> Outcome {
    let mut any = false;
    for item in items {
        match check(item) {
            Outcome::Vacuous => {}
            Outcome::Holds => any = true,
            failure => return failure,
        }
    }
    if any {
        Outcome::Holds
    } else {
        Outcome::Vacuous
    }
}

/// A checkable claim about instances.
pub trait Property: Send + Sync {
    fn id(&self) -> &str;
    fn suite(&self) -> Suite;
    fn applies_to(&self, source: Source) -> bool;
    fn check(&self, instance: &Instance) -> Outcome;
}

struct BuiltIn {
    id: &'static str,
    suite: Suite,
    sources: &'static [Source],
    check: fn(&Instance) -> Outcome,
}

impl Property for BuiltIn {
    fn id(&self) -> &str {
        self.id
    }

    fn suite(&self) -> Suite {
        self.suite
    }

    fn applies_to(&self, source: Source) -> bool {
        self.sources.contains(&source)
    }

    fn check(&self, instance: &Instance) -> Outcome {
        (self.check)(instance)
    }
}

use Source::{Constructed as C, Exhaustive as E, Golden as GOLD, Sampled as S};

const TABLES: &[Source] = &[E, S];
const ALL_BUT_GOLDEN: &[Source] = &[E, S, C];

/// Every built-in property, in a fixed order.
pub fn builtin_properties() -> Vec<Box<dyn Property>> {
    let props = [
        (Suite::Goldens, "example_one_facts", &[GOLD][..], example_one_facts as fn(&Instance) -> Outcome),
        (Suite::Goldens, "example_two_facts", &[GOLD], example_two_facts),
        (Suite::Goldens, "negation_twist_is_determined", &[GOLD], negation_twist_is_determined),
        (Suite::Identities, "generalized_inflation_square_form", TABLES, generalized_inflation_square_form),
        (Suite::Identities, "rectangular_band_is_band", TABLES, rectangular_band_is_band),
        (Suite::Identities, "gpd_round_trip", TABLES, gpd_round_trip),
        (Suite::Membership, "membership_characterization_agrees", &[E], membership_characterization_agrees),
        (Suite::Involutions, "twist_transfers_involutive_automorphisms", TABLES, twist_transfers_automorphisms),
        (Suite::Involutions, "automorphism_search_matches_filter", TABLES, automorphism_search_matches_filter),
        (Suite::Involutions, "absorbing_involution_forces_band", TABLES, absorbing_involution_forces_band),
        (Suite::Involutions, "automorphism_iff_left_translation", TABLES, automorphism_iff_left_translation),
        (Suite::Involutions, "left_translation_forces_idempotence", TABLES, left_translation_forces_idempotence),
        (Suite::Involutions, "left_translation_triple_law_is_automorphism", TABLES, left_translation_is_automorphism),
        (Suite::Involutions, "right_translation_only_identity", TABLES, right_translation_only_identity),
        (Suite::Involutions, "band_triple_law_gives_absorption", TABLES, band_triple_law_gives_absorption),
        (Suite::Involutions, "left_translation_idempotence_iff_absorption", TABLES, idempotence_iff_absorption),
        (Suite::Involutions, "nontrivial_automorphism_swaps_a_pair", TABLES, nontrivial_automorphism_swaps_a_pair),
        (Suite::Inverse, "inverse_antihom_forces_semilattice", ALL_BUT_GOLDEN, inverse_antihom_forces_semilattice),
        (Suite::Inverse, "triple_law_automorphism_is_canonical", ALL_BUT_GOLDEN, triple_law_automorphism_is_canonical),
        (Suite::Inverse, "semilattice_iff_inverse_antihom", ALL_BUT_GOLDEN, semilattice_iff_inverse_antihom),
        (Suite::Inverse, "strongly_regular_twist_is_completely_inverse", ALL_BUT_GOLDEN, strongly_regular_is_ci),
        (Suite::Inverse, "right_bol_iff_canonical_triple_law", ALL_BUT_GOLDEN, right_bol_iff_canonical_triple_law),
        (Suite::Inverse, "e_fixed_iff_canonical_on_semigroup_twists", ALL_BUT_GOLDEN, e_fixed_iff_canonical),
        (Suite::Decision, "criteria_agree", ALL_BUT_GOLDEN, criteria_agree),
        (Suite::Decision, "witness_reproduces_input", ALL_BUT_GOLDEN, witness_reproduces_input),
        (Suite::Decision, "twist_round_trip", ALL_BUT_GOLDEN, twist_round_trip),
        (Suite::Decision, "constructed_instances_are_determined", &[C], constructed_instances_are_determined),
        (Suite::Decision, "partition_search_agrees", TABLES, partition_search_agrees),
        (Suite::Decision, "block_partition_is_twisted", &[C], block_partition_is_twisted),
        (Suite::SlgTwist, "slg_twist_consequences", ALL_BUT_GOLDEN, slg_twist_consequences),
        (Suite::Construction, "decompose_inverts_build", &[C], decompose_inverts_build),
        (Suite::Construction, "build_inverts_decompose", ALL_BUT_GOLDEN, build_inverts_decompose),
        (Suite::Construction, "recovered_maps_are_homomorphisms", ALL_BUT_GOLDEN, recovered_maps_are_homomorphisms),
        (Suite::Construction, "constructed_is_completely_inverse", &[C], constructed_is_completely_inverse),
        (Suite::Construction, "strong_build_untwists_determined_build", &[C], strong_build_untwists_determined),
        (Suite::Construction, "cspec_round_trip", &[C], cspec_round_trip),
        (Suite::Inclusions, "inclusion_claims_hold", &[E, C], inclusion_claims_hold),
        (Suite::Inclusions, "semigroup_twist_consequences", ALL_BUT_GOLDEN, semigroup_twist_consequences),
    ];
    props
        .into_iter()
        .map(|(suite, id, sources, check)| Box::new(BuiltIn { id, suite, sources, check }) as Box<dyn Property>)
        .collect()
}

/// The golden instances: the two worked examples and the
/// negation twist of `Z3`.
pub fn golden_instances() -> Vec<Instance> {
    vec![
        Instance::golden(EXAMPLE_ONE, fixtures::three_element_band(), fixtures::three_element_band_alpha()),
        Instance::golden(EXAMPLE_TWO, fixtures::two_element_swap(), fixtures::two_element_swap_alpha()),
        Instance::golden(NEGATION_TWIST, fixtures::z3_twist(), fixtures::negation(3)),
    ]
}

pub const EXAMPLE_ONE: &str = "example_1";
pub const EXAMPLE_TWO: &str = "example_2";
pub const NEGATION_TWIST: &str = "z3_twist";

fn image(f: &Mapping) -> Vec<Element> {
    f.image().to_vec()
}

/// `x(fx) = fx` for all `x`.
fn absorbs(g: &Groupoid, f: &Mapping) -> bool {
    g.elements().all(|x| g.product(x, f.apply(x)) == f.apply(x))
}

fn is_band(g: &Groupoid) -> bool {
    g.elements().all(|x| g.is_idempotent(x))
}

/// Named boolean facts; fails listing the ones that are false.
fn facts(list: &[(&str, bool)]) -> Outcome {
    let failing: Vec<&str> = list.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    Outcome::check(failing.is_empty(), Vec::new, || format!("false: {}", failing.join(", ")))
}

fn golden_alpha(i: &Instance) -> &Mapping {
    i.alpha.as_ref().expect("golden instances carry α")
}

fn example_one_facts(i: &Instance) -> Outcome {
    if i.label != Some(EXAMPLE_ONE) {
        return Outcome::Vacuous;
    }
    let (g, a) = (&i.groupoid, golden_alpha(i));
    facts(&[
        ("α is an involution", a.is_involution() && !a.is_identity()),
        ("x·αx = αx", absorbs(g, a)),
        ("(xy)z = (αx)(yz) = x(yz)", satisfies_triple_law(g, a) && g.is_associative()),
        ("α ∉ LT", !in_lt(a, g)),
        ("AUT² = {identity}", i.aut2() == [Mapping::identity(g.order())]),
    ])
}

fn example_two_facts(i: &Instance) -> Outcome {
    if i.label != Some(EXAMPLE_TWO) {
        return Outcome::Vacuous;
    }
    let (g, a) = (&i.groupoid, golden_alpha(i));
    facts(&[
        ("x·αx = αx", absorbs(g, a)),
        ("(xy)z = (αx)(yz)", satisfies_triple_law(g, a)),
        ("α ∈ AUT²", is_involutive_automorphism(a, g)),
        ("α ∉ LT", !in_lt(a, g)),
    ])
}

fn negation_twist_is_determined(i: &Instance) -> Outcome {
    if i.label != Some(NEGATION_TWIST) {
        return Outcome::Vacuous;
    }
    let d = i.decision();
    facts(&[
        ("determined", d.determined),
        ("no alarms", d.alarms.is_empty()),
        ("witness α is negation", d.witness.as_ref().is_some_and(|w| &w.alpha == golden_alpha(i))),
        ("witness star is Z3", d.witness.as_ref().is_some_and(|w| w.star == Groupoid::cyclic(3))),
    ])
}

const GENERALIZED: [VarietyId; 4] = [VarietyId::GB, VarietyId::GL0, VarietyId::GR0, VarietyId::GRB];

fn generalized_inflation_square_form(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    all(GENERALIZED.iter().enumerate(), |(k, &gx)| match square_in_base(g, gx) {
        Err(_) => Outcome::Vacuous,
        Ok(square_form) => {
            let identity_form = satisfies_variety(g, gx);
            Outcome::check(identity_form == square_form, || vec![k], || {
                format!("{gx}: identity form {identity_form}, square form {square_form}")
            })
        }
    })
}

fn rectangular_band_is_band(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    Outcome::implies(
        satisfies_variety(g, VarietyId::RB),
        || g.is_associative() && is_band(g),
        Vec::new,
        || "RB member that is not an associative band".into(),
    )
}

fn gpd_round_trip(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    Outcome::check(Groupoid::parse_gpd(&g.to_gpd()).as_ref() == Ok(g), Vec::new, || {
        "parse(to_gpd(G)) differs from G".into()
    })
}

fn membership_characterization_agrees(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    all(VarietyId::ALL.iter().enumerate(), |(k, &x)| {
        let direct = ad_membership_direct(g, x).is_some();
        let characterized = ad_membership_characterized(g, x).is_some();
        Outcome::check(direct == characterized, || vec![k], || {
            format!("AD({x}): direct {direct}, characterized {characterized}")
        })
    })
}

/// Checks `check` for every involution on the instance's elements.
fn each_involution(i: &Instance, check: impl FnMut(&Mapping) -> Outcome) -> Outcome {
    all(involutions(i.groupoid.order()).iter(), check)
}

fn twist_transfers_automorphisms(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        let star = untwist(g, f).expect("f is an involution");
        let (on_g, on_star) = (is_involutive_automorphism(f, g), is_involutive_automorphism(f, &star));
        Outcome::check(on_g == on_star, || image(f), || {
            format!("f ∈ AUT²(G) is {on_g} but f ∈ AUT²(untwist(G, f)) is {on_star}")
        })
    })
}

fn automorphism_search_matches_filter(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let filtered: Vec<Mapping> = involutions(g.order())
        .into_iter()
        .filter(|f| is_homomorphism(f, g, g))
        .collect();
    let found = i.aut2();
    let self_check = found.iter().all(|f| f.is_involution() && is_homomorphism(f, g, g));
    Outcome::check(self_check && found == filtered.as_slice(), Vec::new, || {
        format!("search found {} maps, filter found {}", found.len(), filtered.len())
    })
}

/// The shared hypotheses: `x(fx) = fx` and `(xy)z = (fx)(yz) = x(yz)`.
fn absorbing_associative(g: &Groupoid, f: &Mapping) -> bool {
    absorbs(g, f) && g.is_associative() && satisfies_triple_law(g, f)
}

fn absorbing_involution_forces_band(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        Outcome::implies(absorbing_associative(g, f), || is_band(g), || image(f), || "G is not a band".into())
    })
}

fn automorphism_iff_left_translation(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        let (aut, lt) = (is_involutive_automorphism(f, g), in_lt(f, g));
        Outcome::implies(absorbing_associative(g, f), || aut == lt, || image(f), || {
            format!("f ∈ AUT² is {aut} but f ∈ LT is {lt}")
        })
    })
}

fn left_translation_forces_idempotence(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        Outcome::implies(absorbs(g, f) && in_lt(f, g), || is_band(g), || image(f), || {
            "some x ≠ x²".into()
        })
    })
}

fn left_translation_is_automorphism(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        Outcome::implies(
            absorbs(g, f) && in_lt(f, g) && satisfies_triple_law(g, f),
            || is_involutive_automorphism(f, g),
            || image(f),
            || "f ∉ AUT²".into(),
        )
    })
}

fn right_translation_only_identity(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        let rt = in_rt(f, g);
        Outcome::implies(absorbing_associative(g, f), || rt == f.is_identity(), || image(f), || {
            format!("f ∈ RT is {rt} but f = 1 is {}", f.is_identity())
        })
    })
}

fn band_triple_law_gives_absorption(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        Outcome::implies(is_band(g) && satisfies_triple_law(g, f), || absorbs(g, f), || image(f), || {
            "some x(fx) ≠ fx".into()
        })
    })
}

fn idempotence_iff_absorption(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_involution(i, |f| {
        let (band, absorbing) = (is_band(g), absorbs(g, f));
        Outcome::implies(in_lt(f, g) && satisfies_triple_law(g, f), || band == absorbing, || image(f), || {
            format!("band is {band} but absorption is {absorbing}")
        })
    })
}

fn nontrivial_automorphism_swaps_a_pair(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    all(i.aut2().iter(), |f| {
        let hypothesis = !f.is_identity() && absorbing_associative(g, f) && is_band(g);
        let swapped = || {
            g.elements().any(|a| {
                let b = f.apply(a);
                a != b && g.product(a, b) == b && g.product(b, a) == a
            })
        };
        Outcome::implies(hypothesis, swapped, || image(f), || "no a ≠ b with fa = b, ab = b, ba = a".into())
    })
}

/// `aa⁻¹ ∈ E(S)` for all `a`.
fn products_with_inverse_idempotent(g: &Groupoid, t: &InverseTable) -> bool {
    g.elements().all(|a| g.is_idempotent(g.product(a, t.inverse(a))))
}

fn fixes_idempotents(g: &Groupoid, f: &Mapping) -> bool {
    f.fixes_all(g.idempotents().iter())
}

fn inverse_antihom_forces_semilattice(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    if i.inverses().is_none() || !is_right_bol(g) {
        return Outcome::Vacuous;
    }
    all(i.aut2().iter(), |f| {
        Outcome::implies(
            fixes_idempotents(g, f) && antihom_inverse_condition(g, f).unwrap_or(false),
            || idempotents_form_semilattice(g),
            || image(f),
            || "E(S) is not a semilattice".into(),
        )
    })
}

/// Inverse, `aa⁻¹ ∈ E(S)`, and the triple law for some `α ∈ AUT²`: calls
/// `check` for each such `α`.
fn each_triple_law_automorphism(i: &Instance, check: impl FnMut(&Mapping) -> Outcome) -> Outcome {
    let g = &i.groupoid;
    match i.inverses() {
        Some(t) if products_with_inverse_idempotent(g, t) => {
            all(i.aut2().iter().filter(|f| satisfies_triple_law(g, f)), check)
        }
        _ => Outcome::Vacuous,
    }
}

fn triple_law_automorphism_is_canonical(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_triple_law_automorphism(i, |f| {
        let t = i.inverses().expect("inverse");
        let fixed = fixes_idempotents(g, f);
        let canonical = g.elements().all(|a| f.apply(a) == g.product(a, g.product(t.inverse(a), a)));
        Outcome::check(fixed && canonical, || image(f), || {
            format!("idempotent-fixed {fixed}, αa = a(a⁻¹a) {canonical}")
        })
    })
}

fn semilattice_iff_inverse_antihom(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    each_triple_law_automorphism(i, |f| {
        let semilattice = idempotents_form_semilattice(g);
        let antihom = antihom_inverse_condition(g, f).unwrap_or(false);
        Outcome::check(semilattice == antihom, || image(f), || {
            format!("E(S) semilattice {semilattice}, (ab)⁻¹ = (αb⁻¹)(αa⁻¹) {antihom}")
        })
    })
}

fn strongly_regular_is_ci(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let hypothesis = is_strongly_regular(g)
        && idempotents_form_semilattice(g)
        && i.aut2().iter().any(|f| fixes_idempotents(g, f) && satisfies_triple_law(g, f));
    Outcome::implies(hypothesis, || is_completely_inverse(g), Vec::new, || "not completely inverse".into())
}

fn right_bol_iff_canonical_triple_law(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    if !is_completely_inverse(g) {
        return Outcome::Vacuous;
    }
    let alpha = canonical_alpha(g).expect("completely inverse groupoids are inverse");
    let hypothesis = is_involutive_automorphism(&alpha, g)
        && (idempotents_form_semilattice(g) || antihom_inverse_condition(g, &alpha).unwrap_or(false));
    let (bol, triple) = (is_right_bol(g), satisfies_triple_law(g, &alpha));
    Outcome::implies(hypothesis, || bol == triple, || image(&alpha), || {
        format!("right-Bol {bol}, triple law for a ↦ a(aa⁻¹) {triple}")
    })
}

fn e_fixed_iff_canonical(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let Some(t) = i.inverses().filter(|t| products_with_inverse_idempotent(g, t)) else {
        return Outcome::Vacuous;
    };
    // α ∈ AUT²(untwist(G, α)) exactly when α ∈ AUT²(G), so AUT²(G) lists
    // every α making G a twist of a semigroup by an automorphism
    let semigroup_twists = i
        .aut2()
        .iter()
        .filter(|f| untwist(g, f).is_ok_and(|star| star.is_associative()));
    all(semigroup_twists, |f| {
        let fixed = fixes_idempotents(g, f);
        let canonical = g.elements().all(|a| f.apply(a) == g.product(a, g.product(t.inverse(a), a)));
        Outcome::check(fixed == canonical, || image(f), || {
            format!("idempotent-fixed {fixed}, αa = a(a⁻¹a) {canonical}")
        })
    })
}

fn criteria_agree(i: &Instance) -> Outcome {
    let d = i.decision();
    Outcome::check(d.alarms.is_empty(), Vec::new, || d.alarms.join("; "))
}

fn witness_reproduces_input(i: &Instance) -> Outcome {
    let d = i.decision();
    Outcome::implies(
        d.witness.is_some(),
        || d.witness_check.as_ref().is_some_and(|c| c.valid()) && d.determined,
        Vec::new,
        || format!("witness check failed: {:?}", d.witness_check),
    )
}

fn twist_round_trip(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let alphas: Vec<Mapping> = match i.source {
        Source::Constructed => i.aut2().to_vec(),
        _ => involutions(g.order()),
    };
    all(alphas.iter(), |f| {
        let back = untwist(g, f).and_then(|star| twist(&star, f));
        let forth = twist(g, f).and_then(|t| untwist(&t, f));
        Outcome::check(back.as_ref() == Ok(g) && forth.as_ref() == Ok(g), || image(f), || {
            "twist and untwist are not mutually inverse".into()
        })
    })
}

fn constructed_instances_are_determined(i: &Instance) -> Outcome {
    let d = i.decision();
    let failing: Vec<String> = Criterion::ALL
        .iter()
        .filter(|c| !d.verdict(**c).holds)
        .map(|c| c.to_string())
        .collect();
    Outcome::check(d.determined && failing.is_empty(), Vec::new, || {
        format!("criteria failing on a constructed instance: {}", failing.join(", "))
    })
}

fn partition_search_agrees(i: &Instance) -> Outcome {
    let found = find_twisted_group_partition(&i.groupoid);
    let determined = i.decision().determined;
    Outcome::check(found.is_some() == determined, Vec::new, || {
        format!("partition search {}, decision {determined}", found.is_some())
    })
}

fn block_partition_is_twisted(i: &Instance) -> Outcome {
    let spec = i.spec.as_ref().expect("constructed instances carry their spec");
    let offsets = spec.offsets();
    let class_of = (0..i.groupoid.order())
        .map(|x| offsets[offsets.partition_point(|&start| start <= x) - 1])
        .collect();
    let partition = TwistedGroupPartition { class_of, alpha: i.alpha.clone().expect("constructed α") };
    Outcome::check(is_twisted_group_partition(&i.groupoid, &partition), Vec::new, || {
        "the block partition with the glued α is not a semilattice of twisted groups".into()
    })
}

fn slg_twist_consequences(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let Some(alpha) = i.determining_alpha() else {
        return Outcome::Vacuous;
    };
    let star = untwist(g, &alpha).expect("determining α is an involution");
    match check_slg_twist(g, &star, &alpha) {
        Err(e) => Outcome::fails(image(&alpha), format!("precondition: {e}")),
        Ok(report) => match report.failures().next() {
            None => Outcome::Holds,
            Some(c) => Outcome::fails(c.counterexample.clone().unwrap_or_default(), c.claim.clone()),
        },
    }
}

fn decompose_inverts_build(i: &Instance) -> Outcome {
    let spec = i.spec.as_ref().expect("constructed instances carry their spec");
    match decompose(&i.groupoid, i.alpha.as_ref().expect("constructed α")) {
        Err(e) => Outcome::fails(Vec::new(), e.to_string()),
        Ok(d) => Outcome::check(&d.spec == spec && d.labels.is_identity(), Vec::new, || {
            "decompose(build(spec)) differs from spec".into()
        }),
    }
}

fn build_inverts_decompose(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    let Some(alpha) = i.determining_alpha() else {
        return Outcome::Vacuous;
    };
    let d = match decompose(g, &alpha) {
        Ok(d) => d,
        Err(e) => return Outcome::fails(image(&alpha), e.to_string()),
    };
    let (built, built_alpha) = match build_determined(&d.spec) {
        Ok(b) => b,
        Err(e) => return Outcome::fails(image(&alpha), e.to_string()),
    };
    let restored = built.relabel(d.unlabels().image()).expect("labels are a permutation");
    let alpha_matches = g.elements().all(|x| built_alpha.apply(d.labels.apply(x)) == d.labels.apply(alpha.apply(x)));
    Outcome::check(restored.to_gpd() == g.to_gpd() && alpha_matches, || image(&alpha), || {
        "build(decompose(S, α)) does not reproduce S and α".into()
    })
}

fn recovered_maps_are_homomorphisms(i: &Instance) -> Outcome {
    let Some(alpha) = i.determining_alpha() else {
        return Outcome::Vacuous;
    };
    let d = match decompose(&i.groupoid, &alpha) {
        Ok(d) => d,
        Err(e) => return Outcome::fails(image(&alpha), e.to_string()),
    };
    let bad = first_non_homomorphism(&d);
    Outcome::check(bad.is_none(), || bad.map(|(f, e)| vec![f, e]).unwrap_or_default(), || {
        "a recovered connecting map is not a group homomorphism".into()
    })
}

/// The first `(f, e)` whose connecting map is not a homomorphism of the
/// untwisted groups.
fn first_non_homomorphism(d: &Decomposition) -> Option<(usize, usize)> {
    let groups = &d.spec.groups;
    d.spec
        .homs
        .iter()
        .find(|((f, e), delta)| !is_homomorphism(delta, &groups[*f].table, &groups[*e].table))
        .map(|((f, e), _)| (f, e))
}

fn constructed_is_completely_inverse(i: &Instance) -> Outcome {
    Outcome::check(is_completely_inverse(&i.groupoid), Vec::new, || "not completely inverse".into())
}

fn strong_build_untwists_determined(i: &Instance) -> Outcome {
    let spec = i.spec.as_ref().expect("constructed instances carry their spec");
    let alpha = i.alpha.as_ref().expect("constructed α");
    let strong = match build_strong_slg(spec) {
        Ok(s) => s,
        Err(e) => return Outcome::fails(Vec::new(), e.to_string()),
    };
    facts(&[
        ("strong build is a semilattice of groups", is_semilattice_of_groups(&strong)),
        (
            "glued α ∈ AUT_e² of the strong build",
            is_involutive_automorphism(alpha, &strong) && fixes_idempotents(&strong, alpha),
        ),
        ("twist(strong, α) = determined build", twist(&strong, alpha).as_ref() == Ok(&i.groupoid)),
    ])
}

fn cspec_round_trip(i: &Instance) -> Outcome {
    let spec = i.spec.as_ref().expect("constructed instances carry their spec");
    let text = spec.to_cspec();
    Outcome::check(ConstructionSpec::parse_cspec(&text).as_ref() == Ok(spec), Vec::new, || {
        "parse(to_cspec(spec)) differs from spec".into()
    })
}

fn inclusion_claims_hold(i: &Instance) -> Outcome {
    let report = check_inclusions(&i.groupoid);
    if report.checks.is_empty() {
        return Outcome::Vacuous;
    }
    match report.checks.iter().find(|c| !c.holds) {
        None => Outcome::Holds,
        Some(c) => Outcome::fails(c.counterexample.clone().unwrap_or_default(), c.claim.clone()),
    }
}

fn semigroup_twist_consequences(i: &Instance) -> Outcome {
    let g = &i.groupoid;
    all(i.aut2().iter(), |f| {
        let star = untwist(g, f).expect("f is an involution");
        if !star.is_associative() {
            return Outcome::Vacuous;
        }
        match check_semigroup_twist(g, &star, f) {
            Err(e) => Outcome::fails(image(f), format!("precondition: {e}")),
            Ok(r) if r.all_hold() => Outcome::Holds,
            Ok(r) => Outcome::fails(image(f), format!("{r:?}")),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::GroupSpec;

    fn run(id: &str, instance: &Instance) -> Outcome {
        let props = builtin_properties();
        let p = props.iter().find(|p| p.id() == id).unwrap();
        p.check(instance)
    }

    #[test]
    fn ids_are_unique() {
        let props = builtin_properties();
        let mut ids: Vec<&str> = props.iter().map(|p| p.id()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), props.len());
    }

    #[test]
    fn every_suite_has_properties() {
        let props = builtin_properties();
        for suite in Suite::ALL {
            assert!(props.iter().any(|p| p.suite() == suite), "{}", suite.name());
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
    }

    #[test]
    fn goldens_hold() {
        for g in golden_instances() {
            let expected = match g.label {
                Some(EXAMPLE_ONE) => "example_one_facts",
                Some(EXAMPLE_TWO) => "example_two_facts",
                _ => "negation_twist_is_determined",
            };
            assert_eq!(run(expected, &g), Outcome::Holds, "{expected}");
        }
    }

    #[test]
    fn golden_facts_detect_a_wrong_alpha() {
        let wrong = Instance::golden(EXAMPLE_TWO, fixtures::two_element_swap(), Mapping::identity(2));
        assert!(matches!(run("example_two_facts", &wrong), Outcome::Fails { .. }));
    }

    #[test]
    fn constructed_negation_twist_passes_everything() {
        let spec = ConstructionSpec::single(GroupSpec::new(Groupoid::cyclic(3), fixtures::negation(3)));
        let instance = Instance::constructed(spec).unwrap();
        for p in builtin_properties().iter().filter(|p| p.applies_to(Source::Constructed)) {
            assert!(!matches!(p.check(&instance), Outcome::Fails { .. }), "{}", p.id());
        }
    }

    #[test]
    fn example_one_table_passes_table_properties() {
        let instance = Instance::new(Source::Exhaustive, fixtures::three_element_band());
        for p in builtin_properties().iter().filter(|p| p.applies_to(Source::Exhaustive)) {
            assert!(!matches!(p.check(&instance), Outcome::Fails { .. }), "{}", p.id());
        }
        assert_eq!(run("absorbing_involution_forces_band", &instance), Outcome::Holds);
    }

    #[test]
    fn combinator_reports_vacuity() {
        assert_eq!(all(0..3, |_| Outcome::Vacuous), Outcome::Vacuous);
        assert_eq!(all(0..3, |k| if k == 1 { Outcome::Holds } else { Outcome::Vacuous }), Outcome::Holds);
        assert!(matches!(all(0..3, |k| Outcome::check(k < 2, || vec![k], String::new)), Outcome::Fails { witness, .. } if witness == vec![2]));
    }
}
