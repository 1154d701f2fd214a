//! The decision procedure: is a groupoid determined by a semilattice of
//! groups and an idempotent-fixed involutive automorphism?
//!
//! Three intrinsic criteria are evaluated, all of them every time, plus a
//! direct search that untwists by each involutive automorphism and tests the
//! result for being a semilattice of groups. The criteria are known to be
//! equivalent; any disagreement is recorded as an alarm instead of being
//! resolved.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::inverse::{
    antihom_with, canonical_alpha_with, completely_inverse_with, idempotents_form_semilattice,
    inverse_table, is_right_bol, satisfies_triple_law, strongly_regular_witness, InverseTable,
};
use crate::morphisms::{involutive_automorphisms, is_involutive_automorphism, Mapping};
use crate::report::{to_stable_json, DECISION_FORMAT};

use super::twist::{twist, untwist};
use super::is_semilattice_of_groups;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Completely inverse, some `α ∈ AUT²(S)` with `(ab)c = (αa)(bc)`, and
    /// `E(S)` a semilattice or `(ab)⁻¹ = (αb⁻¹)(αa⁻¹)`.
    CompletelyInverse,
    /// Strongly regular, some `α ∈ AUT_e²(S)` with the triple law, and
    /// `E(S)` a semilattice.
    StronglyRegular,
    /// Completely inverse and right-Bol, `a ↦ a(aa⁻¹)` in `AUT²(S)`, and
    /// `E(S)` a semilattice or the inverse anti-homomorphism law.
    RightBol,
    /// Untwisting by some `α ∈ AUT²(S)` yields a semilattice of groups with
    /// `α` idempotent-fixed.
    DirectSearch,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::CompletelyInverse,
        Criterion::StronglyRegular,
        Criterion::RightBol,
        Criterion::DirectSearch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::CompletelyInverse => "completely_inverse",
            Criterion::StronglyRegular => "strongly_regular",
            Criterion::RightBol => "right_bol",
            Criterion::DirectSearch => "direct_search",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// The first sub-condition that failed.
    pub failing: Option<String>,
    /// The automorphism that satisfied the criterion.
    pub alpha: Option<Mapping>,
}

impl Verdict {
    fn pass(alpha: Mapping) -> Self {
        Verdict { holds: true, failing: None, alpha: Some(alpha) }
    }

    fn fail(reason: &str) -> Self {
        Verdict { holds: false, failing: Some(reason.to_owned()), alpha: None }
    }
}

/// A recovered star groupoid and the automorphism that twists it into the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub star: Groupoid,
    pub alpha: Mapping,
    pub criterion: Criterion,
}

/// Whether the witness satisfies everything a witness must.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub star_is_semilattice_of_groups: bool,
    pub alpha_is_e_fixed_involutive_automorphism: bool,
    pub twist_reproduces_input: bool,
}

impl WitnessCheck {
    pub fn valid(&self) -> bool {
        self.star_is_semilattice_of_groups
            && self.alpha_is_e_fixed_involutive_automorphism
            && self.twist_reproduces_input
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub format: &'static str,
    pub input: Groupoid,
    pub verdicts: BTreeMap<Criterion, Verdict>,
    pub witness: Option<Witness>,
    pub witness_check: Option<WitnessCheck>,
    pub determined: bool,
    /// Disagreements between criteria; empty unless a theorem is violated.
    pub alarms: Vec<String>,
    pub notes: Vec<String>,
}

impl DecisionReport {
    pub fn verdict(&self, criterion: Criterion) -> &Verdict {
        &self.verdicts[&criterion]
    }

    pub fn theorem_violation(&self) -> bool {
        !self.alarms.is_empty()
    }

    /// Fails with [`Error::TheoremViolation`] when an alarm was raised.
    pub fn check(&self) -> Result<()> {
        if self.alarms.is_empty() {
            Ok(())
        } else {
            Err(Error::TheoremViolation(self.alarms.join("; ")))
        }
    }

    pub fn to_json(&self) -> String {
        to_stable_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order: {}\n", self.input.order()));
        out.push_str(&format!("determined: {}\n", self.determined));
        for (c, v) in &self.verdicts {
            match (&v.failing, &v.alpha) {
                (_, Some(a)) if v.holds => out.push_str(&format!("{c}: true (α = {:?})\n", a.image())),
                (Some(why), _) => out.push_str(&format!("{c}: false ({why})\n")),
                _ => out.push_str(&format!("{c}: {}\n", v.holds)),
            }
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness criterion: {}\n", w.criterion));
            out.push_str(&format!("witness α: {:?}\n", w.alpha.image()));
            out.push_str("witness star table:\n");
            out.push_str(&w.star.to_gpd());
        }
        for a in &self.alarms {
            out.push_str(&format!("ALARM: {a}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

struct Facts<'a> {
    g: &'a Groupoid,
    inverse: Option<InverseTable>,
    completely_inverse: bool,
    e_semilattice: bool,
    aut2: Vec<Mapping>,
}

impl Facts<'_> {
    fn antihom(&self, alpha: &Mapping) -> bool {
        self.inverse.as_ref().is_some_and(|t| antihom_with(self.g, t, alpha))
    }
}

const NOT_COMPLETELY_INVERSE: &str = "not a completely inverse groupoid";
const NO_TRIPLE_LAW: &str = "no involutive automorphism satisfies (ab)c = (αa)(bc)";
const NO_SEMILATTICE_OR_ANTIHOM: &str =
    "E(S) is not a semilattice and (ab)⁻¹ = (αb⁻¹)(αa⁻¹) fails for every candidate α";

fn completely_inverse_route(f: &Facts) -> Verdict {
    if !f.completely_inverse {
        return Verdict::fail(NOT_COMPLETELY_INVERSE);
    }
    let candidates: Vec<&Mapping> = f.aut2.iter().filter(|a| satisfies_triple_law(f.g, a)).collect();
    if candidates.is_empty() {
        return Verdict::fail(NO_TRIPLE_LAW);
    }
    match candidates.into_iter().find(|a| f.e_semilattice || f.antihom(a)) {
        Some(a) => Verdict::pass(a.clone()),
        None => Verdict::fail(NO_SEMILATTICE_OR_ANTIHOM),
    }
}

fn strongly_regular_route(f: &Facts) -> Verdict {
    if strongly_regular_witness(f.g).is_none() {
        return Verdict::fail("not strongly regular");
    }
    if !f.e_semilattice {
        return Verdict::fail("E(S) is not a semilattice");
    }
    let e = f.g.idempotents();
    match f
        .aut2
        .iter()
        .find(|a| a.fixes_all(e.iter()) && satisfies_triple_law(f.g, a))
    {
        Some(a) => Verdict::pass(a.clone()),
        None => Verdict::fail("no idempotent-fixed involutive automorphism satisfies (ab)c = (αa)(bc)"),
    }
}

fn right_bol_route(f: &Facts) -> Verdict {
    let (true, Some(t)) = (f.completely_inverse, f.inverse.as_ref()) else {
        return Verdict::fail(NOT_COMPLETELY_INVERSE);
    };
    if !is_right_bol(f.g) {
        return Verdict::fail("not right-Bol");
    }
    let alpha = canonical_alpha_with(f.g, t);
    if !is_involutive_automorphism(&alpha, f.g) {
        return Verdict::fail("a ↦ a(aa⁻¹) is not an involutive automorphism");
    }
    if !(f.e_semilattice || f.antihom(&alpha)) {
        return Verdict::fail(NO_SEMILATTICE_OR_ANTIHOM);
    }
    Verdict::pass(alpha)
}

fn direct_search(f: &Facts) -> Verdict {
    let found = f.aut2.iter().find(|a| {
        let star = untwist(f.g, a).expect("automorphisms in AUT² are involutions");
        is_semilattice_of_groups(&star)
            && is_involutive_automorphism(a, &star)
            && a.fixes_all(star.idempotents().iter())
    });
    match found {
        Some(a) => Verdict::pass(a.clone()),
        None => Verdict::fail("no involutive automorphism untwists to a semilattice of groups"),
    }
}

pub fn check_witness(g: &Groupoid, star: &Groupoid, alpha: &Mapping) -> WitnessCheck {
    WitnessCheck {
        star_is_semilattice_of_groups: is_semilattice_of_groups(star),
        alpha_is_e_fixed_involutive_automorphism: is_involutive_automorphism(alpha, star)
            && alpha.fixes_all(star.idempotents().iter()),
        twist_reproduces_input: twist(star, alpha).is_ok_and(|t| t == *g),
    }
}

pub fn decide(g: &Groupoid) -> DecisionReport {
    let inverse = inverse_table(g).ok();
    let facts = Facts {
        g,
        completely_inverse: inverse.as_ref().is_some_and(|t| completely_inverse_with(g, t)),
        inverse,
        e_semilattice: idempotents_form_semilattice(g),
        aut2: involutive_automorphisms(g),
    };

    let verdicts = BTreeMap::from([
        (Criterion::CompletelyInverse, completely_inverse_route(&facts)),
        (Criterion::StronglyRegular, strongly_regular_route(&facts)),
        (Criterion::RightBol, right_bol_route(&facts)),
        (Criterion::DirectSearch, direct_search(&facts)),
    ]);

    let witness = verdicts.iter().find(|(_, v)| v.holds).map(|(c, v)| {
        let alpha = v.alpha.clone().expect("passing verdicts carry α");
        Witness {
            star: untwist(g, &alpha).expect("α is an involution"),
            alpha,
            criterion: *c,
        }
    });
    let witness_check = witness.as_ref().map(|w| check_witness(g, &w.star, &w.alpha));

    let mut alarms = Vec::new();
    let first = verdicts[&Criterion::CompletelyInverse].holds;
    for (c, v) in verdicts.iter().skip(1) {
        if v.holds != first {
            alarms.push(format!(
                "criterion {c} = {} disagrees with {} = {first}",
                v.holds,
                Criterion::CompletelyInverse
            ));
        }
    }
    if let Some(check) = &witness_check {
        if !check.valid() {
            alarms.push(format!("witness fails its own validity check: {check:?}"));
        }
    }
    // every criterion singles out the same α
    let alphas: Vec<&Mapping> = verdicts.values().filter_map(|v| v.alpha.as_ref()).collect();
    if alphas.windows(2).any(|w| w[0] != w[1]) {
        alarms.push("criteria found different automorphisms".into());
    }

    let mut notes = Vec::new();
    if g.idempotents().is_empty() {
        notes.push("E(S) is empty; treated as a degenerate semilattice".into());
    }

    DecisionReport {
        format: DECISION_FORMAT,
        input: g.clone(),
        determined: witness_check.as_ref().is_some_and(WitnessCheck::valid),
        verdicts,
        witness,
        witness_check,
        alarms,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn z3_twist_is_determined() {
        let r = decide(&fixtures::z3_twist());
        assert!(r.determined);
        assert!(r.alarms.is_empty());
        for c in Criterion::ALL {
            assert!(r.verdict(c).holds, "{c}");
        }
        let w = r.witness.unwrap();
        assert_eq!(w.star, Groupoid::cyclic(3));
        assert_eq!(w.alpha, fixtures::negation(3));
    }

    #[test]
    fn band_fixture_is_not_determined() {
        let r = decide(&fixtures::three_element_band());
        assert!(!r.determined);
        assert!(r.alarms.is_empty());
        assert!(Criterion::ALL.iter().all(|&c| !r.verdict(c).holds));
        assert!(r.witness.is_none());
    }

    #[test]
    fn semilattices_are_determined_by_themselves() {
        for g in [fixtures::two_chain(), Groupoid::from_fn(3, |x, y| x.min(y)).unwrap()] {
            let r = decide(&g);
            assert!(r.determined && r.alarms.is_empty());
            let w = r.witness.unwrap();
            assert_eq!(w.alpha, Mapping::identity(g.order()));
            assert_eq!(w.star, g);
        }
    }

    #[test]
    fn empty_idempotent_set_is_noted() {
        let r = decide(&fixtures::two_element_swap());
        assert!(!r.determined);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn json_is_stable_and_sorted() {
        let r = decide(&fixtures::z3_twist());
        let a = r.to_json();
        assert_eq!(a, decide(&fixtures::z3_twist()).to_json());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["format"], DECISION_FORMAT);
    }
}
