//! Checkers for the structural consequences of a twist.
//!
//! Each checker evaluates every numbered consequence over all element tuples
//! and reports pass/fail per item with the first failing tuple.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid};
use crate::inverse::{
    completely_inverse_with, first_right_bol_failure, first_triple_law_failure,
    idempotents_form_semilattice, inverse_table, InverseTable,
};
use crate::morphisms::{involutive_automorphisms, is_homomorphism, is_involutive_automorphism, Mapping};
use crate::variety::VarietyId;

use super::membership::ad_witnesses_among;
use super::twist::twist;
use super::is_semilattice_of_groups;

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub holds: bool,
    /// First failing tuple, when the claim quantifies over elements.
    pub counterexample: Option<Vec<Element>>,
}

impl ClaimCheck {
    fn new(claim: impl Into<String>, counterexample: Option<Vec<Element>>) -> Self {
        ClaimCheck { claim: claim.into(), holds: counterexample.is_none(), counterexample }
    }

    fn flag(claim: impl Into<String>, holds: bool) -> Self {
        ClaimCheck { claim: claim.into(), holds, counterexample: None }
    }
}

fn all_hold(items: &[ClaimCheck]) -> bool {
    items.iter().all(|c| c.holds)
}

/// Consequences of `G = twist(star, α)` with `star` a semigroup and
/// `α ∈ AUT²(star)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupTwistReport {
    pub triple_law: ClaimCheck,
    pub right_bol: ClaimCheck,
    /// `α : star ≅ G` holds exactly when the two products coincide.
    pub isomorphism_iff_products_agree: ClaimCheck,
    pub alpha_is_isomorphism: bool,
    pub products_agree: bool,
}

impl SemigroupTwistReport {
    pub fn all_hold(&self) -> bool {
        self.triple_law.holds && self.right_bol.holds && self.isomorphism_iff_products_agree.holds
    }
}

pub fn check_semigroup_twist(g: &Groupoid, star: &Groupoid, alpha: &Mapping) -> Result<SemigroupTwistReport> {
    if !star.is_associative() {
        return Err(Error::PreconditionViolated("star groupoid is not associative".into()));
    }
    if !is_involutive_automorphism(alpha, star) {
        return Err(Error::PreconditionViolated("α is not an involutive automorphism of the star groupoid".into()));
    }
    if twist(star, alpha)? != *g {
        return Err(Error::PreconditionViolated("G is not the twist of the star groupoid by α".into()));
    }
    let alpha_is_isomorphism = is_homomorphism(alpha, star, g);
    let products_agree = g == star;
    Ok(SemigroupTwistReport {
        triple_law: ClaimCheck::new(
            "(xy)z = (αx)(yz)",
            first_triple_law_failure(g, alpha).map(|t| t.to_vec()),
        ),
        right_bol: ClaimCheck::new("((xy)z)w = x((yz)w)", first_right_bol_failure(g).map(|t| t.to_vec())),
        isomorphism_iff_products_agree: ClaimCheck::flag(
            "α : {S,*} ≅ S iff xy = x*y",
            alpha_is_isomorphism == products_agree,
        ),
        alpha_is_isomorphism,
        products_agree,
    })
}

/// The thirteen consequences of `G = twist(star, α)` with `star` a
/// semilattice of groups and `α ∈ AUT_e²(star)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlgTwistReport {
    pub items: Vec<ClaimCheck>,
}

impl SlgTwistReport {
    pub fn all_hold(&self) -> bool {
        all_hold(&self.items)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.items.iter().filter(|c| !c.holds)
    }
}

fn find1(n: usize, mut bad: impl FnMut(usize) -> bool) -> Option<Vec<Element>> {
    (0..n).find(|&a| bad(a)).map(|a| vec![a])
}

fn find2(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<Element>> {
    for a in 0..n {
        for b in 0..n {
            if bad(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

pub fn check_slg_twist(g: &Groupoid, star: &Groupoid, alpha: &Mapping) -> Result<SlgTwistReport> {
    if !is_semilattice_of_groups(star) {
        return Err(Error::PreconditionViolated("star groupoid is not a semilattice of groups".into()));
    }
    let star_e = star.idempotents();
    if !is_involutive_automorphism(alpha, star) || !alpha.fixes_all(star_e.iter()) {
        return Err(Error::PreconditionViolated(
            "α is not an idempotent-fixed involutive automorphism of the star groupoid".into(),
        ));
    }
    if twist(star, alpha)? != *g {
        return Err(Error::PreconditionViolated("G is not the twist of the star groupoid by α".into()));
    }

    let n = g.order();
    let p = |a, b| g.product(a, b);
    let al = |a| alpha.apply(a);
    let mut items = Vec::with_capacity(13);

    let table: Option<InverseTable> = inverse_table(g).ok();
    let completely = table.as_ref().is_some_and(|t| completely_inverse_with(g, t));
    items.push(ClaimCheck::flag("S is completely inverse", completely));

    let e = g.idempotents();
    items.push(ClaimCheck::flag(
        "E(S) = E({S,*}) and is a semilattice",
        e == star_e && idempotents_form_semilattice(g),
    ));
    items.push(ClaimCheck::flag(
        "α ∈ AUT_e²(S)",
        is_involutive_automorphism(alpha, g) && alpha.fixes_all(e.iter()),
    ));

    let Some(t) = table else {
        // the remaining items mention inverses; report them as failing
        for claim in [
            "αa = a(a⁻¹a) = a(aa⁻¹)",
            "(ab)⁻¹ = (αb⁻¹)(αa⁻¹)",
            "(ab)c = (αa)(bc)",
            "(aa)a⁻¹ = a",
            "(αa)⁻¹ = α(a⁻¹)",
            "a((bc)d) = ((ab)c)d",
            "ea = (αa)e for e ∈ E(S)",
            "e(ab) = (ea)(eb) for e ∈ E(S)",
            "(ab)(ab)⁻¹ = (aa⁻¹)(bb⁻¹) = (b⁻¹a⁻¹)(b⁻¹a⁻¹)⁻¹",
            "aa⁻¹ = a * a⁻¹ (star inverse)",
        ] {
            items.push(ClaimCheck::flag(claim, false));
        }
        return Ok(SlgTwistReport { items });
    };
    let inv = |a| t.inverse(a);

    items.push(ClaimCheck::new(
        "αa = a(a⁻¹a) = a(aa⁻¹)",
        find1(n, |a| al(a) != p(a, p(inv(a), a)) || al(a) != p(a, p(a, inv(a)))),
    ));
    items.push(ClaimCheck::new(
        "(ab)⁻¹ = (αb⁻¹)(αa⁻¹)",
        find2(n, |a, b| inv(p(a, b)) != p(al(inv(b)), al(inv(a)))),
    ));
    items.push(ClaimCheck::new(
        "(ab)c = (αa)(bc)",
        first_triple_law_failure(g, alpha).map(|x| x.to_vec()),
    ));
    items.push(ClaimCheck::new("(aa)a⁻¹ = a", find1(n, |a| p(p(a, a), inv(a)) != a)));
    items.push(ClaimCheck::new("(αa)⁻¹ = α(a⁻¹)", find1(n, |a| inv(al(a)) != al(inv(a)))));
    items.push(ClaimCheck::new(
        "a((bc)d) = ((ab)c)d",
        first_right_bol_failure(g).map(|x| x.to_vec()),
    ));
    items.push(ClaimCheck::new(
        "ea = (αa)e for e ∈ E(S)",
        e.iter()
            .find_map(|ei| find1(n, |a| p(ei, a) != p(al(a), ei)).map(|v| vec![ei, v[0]])),
    ));
    items.push(ClaimCheck::new(
        "e(ab) = (ea)(eb) for e ∈ E(S)",
        e.iter().find_map(|ei| {
            find2(n, |a, b| p(ei, p(a, b)) != p(p(ei, a), p(ei, b))).map(|v| vec![ei, v[0], v[1]])
        }),
    ));
    items.push(ClaimCheck::new(
        "(ab)(ab)⁻¹ = (aa⁻¹)(bb⁻¹) = (b⁻¹a⁻¹)(b⁻¹a⁻¹)⁻¹",
        find2(n, |a, b| {
            let ab = p(a, b);
            let lhs = p(ab, inv(ab));
            let mid = p(p(a, inv(a)), p(b, inv(b)));
            let w = p(inv(b), inv(a));
            lhs != mid || lhs != p(w, inv(w))
        }),
    ));
    let star_inverse = inverse_table(star);
    items.push(ClaimCheck::new(
        "aa⁻¹ = a * a⁻¹ (star inverse)",
        match &star_inverse {
            Ok(s) => find1(n, |a| p(a, inv(a)) != star.product(a, s.inverse(a))),
            Err(_) => Some(vec![]),
        },
    ));
    Ok(SlgTwistReport { items })
}

/// Inclusion and isomorphism claims for `AD(X)` over the twelve classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    /// Only claims whose hypotheses hold for the input are listed.
    pub checks: Vec<ClaimCheck>,
    /// Membership `G ∈ AD(X)` per class, in class order.
    pub memberships: Vec<(VarietyId, bool)>,
    /// Whether `S = S²`.
    pub globally_idempotent: bool,
}

impl InclusionReport {
    pub fn all_hold(&self) -> bool {
        all_hold(&self.checks)
    }
}

/// Classes for which a semigroup twist is always isomorphic to its star
/// groupoid, without assuming `S = S²`.
const ISOMORPHIC_WITHOUT_SQUARE: [VarietyId; 9] = [
    VarietyId::B,
    VarietyId::L0,
    VarietyId::R0,
    VarietyId::RB,
    VarietyId::IB,
    VarietyId::IL0,
    VarietyId::IR0,
    VarietyId::IRB,
    VarietyId::GL0,
];

/// Memberships are computed from `AUT²(G)` (see [`ad_witnesses_among`]),
/// which keeps the check fast on larger constructed groupoids.
pub fn check_inclusions(g: &Groupoid) -> InclusionReport {
    let aut2 = involutive_automorphisms(g);
    let witnesses: Vec<(VarietyId, Vec<Mapping>)> = VarietyId::ALL
        .iter()
        .map(|&x| (x, ad_witnesses_among(g, x, &aut2)))
        .collect();
    let member: Vec<(VarietyId, bool)> = witnesses.iter().map(|(x, w)| (*x, !w.is_empty())).collect();
    let is_member = |x: VarietyId| member.iter().any(|&(y, m)| y == x && m);
    let mut checks = Vec::new();

    for x in VarietyId::BASE {
        let (ix, gx) = (x.inflation(), x.generalized_inflation());
        if is_member(x) {
            checks.push(ClaimCheck::flag(format!("AD({x}) ⊆ AD({ix})"), is_member(ix)));
        }
        if is_member(ix) {
            checks.push(ClaimCheck::flag(format!("AD({ix}) ⊆ AD({gx})"), is_member(gx)));
        }
        if is_member(gx) {
            let sq = g.square_subgroupoid().expect("squares are closed").groupoid;
            let sq_aut2 = involutive_automorphisms(&sq);
            checks.push(ClaimCheck::flag(
                format!("S ∈ AD({gx}) ⇒ S² ∈ AD({x})"),
                !ad_witnesses_among(&sq, x, &sq_aut2).is_empty(),
            ));
        }
    }

    let semigroup = g.is_associative();
    let globally_idempotent = g.square_set().len() == g.order();
    if semigroup {
        for &(x, m) in &member {
            if !m {
                continue;
            }
            checks.push(ClaimCheck::flag(
                format!("semigroup S ∈ AD({x}) ⇒ S ∈ {x}"),
                crate::variety::satisfies_variety(g, x),
            ));
            let needs_square = !ISOMORPHIC_WITHOUT_SQUARE.contains(&x);
            if needs_square && !globally_idempotent {
                continue;
            }
            let witnesses = &witnesses.iter().find(|(y, _)| *y == x).expect("every class is listed").1;
            let bad = witnesses.iter().position(|alpha| {
                let star = super::twist::untwist(g, alpha).expect("witnesses are involutions");
                !is_homomorphism(alpha, &star, g)
            });
            let label = if needs_square {
                format!("semigroup S = S² ∈ AD({x}) ⇒ α : {{S,*}} ≅ S")
            } else {
                format!("semigroup S ∈ AD({x}) ⇒ α : {{S,*}} ≅ S")
            };
            checks.push(ClaimCheck::new(
                label,
                bad.map(|i| witnesses[i].image().to_vec()),
            ));
        }
    }

    InclusionReport { checks, memberships: member, globally_idempotent }
}
