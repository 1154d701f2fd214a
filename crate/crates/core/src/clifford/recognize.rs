//! Direct recognition of a groupoid as a semilattice `E(S)` of twisted groups
//! satisfying `(ab)c = (αa)(bc)`, without passing through an untwisted
//! semigroup.

use crate::groupoid::{Element, Groupoid};
use crate::inverse::{idempotents_form_semilattice, satisfies_triple_law};
use crate::morphisms::{involutions, Mapping};

/// A partition of `S` into classes `S(e)`, one per idempotent, and the glued
/// `α = ∪ α_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedGroupPartition {
    /// `class_of[x]` is the idempotent `e` with `x ∈ S(e)`.
    pub class_of: Vec<Element>,
    pub alpha: Mapping,
}

/// Searches every assignment of elements to idempotents and every involution
/// for a partition where
///
/// - `e ∈ S(e)` and `S(e)S(f) ⊆ S(ef)`, with `E(S)` a semilattice;
/// - each `S(e)` is determined by a group with identity `e` and an
///   automorphism `α_e` of it, the restriction of `α`;
/// - `(ab)c = (αa)(bc)` for all `a, b, c`.
///
/// Exponential in the number of non-idempotents; meant for small orders.
pub fn find_twisted_group_partition(g: &Groupoid) -> Option<TwistedGroupPartition> {
    let n = g.order();
    let idempotents: Vec<Element> = g.idempotents().iter().collect();
    if idempotents.is_empty() || !idempotents_form_semilattice(g) {
        return None;
    }
    let free: Vec<Element> = g.elements().filter(|x| !g.is_idempotent(*x)).collect();
    let alphas: Vec<Mapping> = involutions(n)
        .into_iter()
        .filter(|a| a.fixes_all(idempotents.iter().copied()) && satisfies_triple_law(g, a))
        .collect();
    if alphas.is_empty() {
        return None;
    }

    let mut choice = vec![0usize; free.len()];
    loop {
        let mut class_of: Vec<Element> = g.elements().collect();
        for (&x, &c) in free.iter().zip(&choice) {
            class_of[x] = idempotents[c];
        }
        if is_semilattice_partition(g, &class_of) {
            if let Some(alpha) = alphas.iter().find(|a| classes_are_twisted_groups(g, &class_of, a)) {
                return Some(TwistedGroupPartition { class_of, alpha: alpha.clone() });
            }
        }
        // odometer over assignments
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < idempotents.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Whether `partition` meets every condition listed on
/// [`find_twisted_group_partition`].
pub fn is_twisted_group_partition(g: &Groupoid, partition: &TwistedGroupPartition) -> bool {
    let (class_of, alpha) = (&partition.class_of, &partition.alpha);
    class_of.len() == g.order()
        && alpha.is_self_map_of(g.order())
        && alpha.is_involution()
        && idempotents_form_semilattice(g)
        && g.idempotents().iter().all(|e| class_of[e] == e)
        && class_of.iter().all(|&e| g.is_idempotent(e))
        && is_semilattice_partition(g, class_of)
        && classes_are_twisted_groups(g, class_of, alpha)
        && satisfies_triple_law(g, alpha)
}

fn is_semilattice_partition(g: &Groupoid, class_of: &[Element]) -> bool {
    g.elements().all(|x| {
        g.elements()
            .all(|y| class_of[g.product(x, y)] == g.product(class_of[x], class_of[y]))
    })
}

/// Each class, with `a∘b = (αa)b`, is a group with identity `e` and `α`
/// restricts to an automorphism of it.
fn classes_are_twisted_groups(g: &Groupoid, class_of: &[Element], alpha: &Mapping) -> bool {
    let same = |a: Element, b: Element| class_of[a] == class_of[b];
    if !g.elements().all(|a| same(alpha.apply(a), a)) {
        return false;
    }
    let op = |a: Element, b: Element| g.product(alpha.apply(a), b);
    let members = |a: Element| g.elements().filter(move |&b| same(a, b));
    g.elements().all(|a| {
        let e = class_of[a];
        op(e, a) == a
            && op(a, e) == a
            && members(a).any(|b| op(a, b) == e && op(b, a) == e)
            && members(a).all(|b| {
                alpha.apply(op(a, b)) == op(alpha.apply(a), alpha.apply(b))
                    && members(a).all(|c| op(op(a, b), c) == op(a, op(b, c)))
            })
    })
}
