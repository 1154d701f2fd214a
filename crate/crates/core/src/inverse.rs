//! Inverse-theoretic predicates on groupoids.
//!
//! Inverses use the displayed parenthesization `(xy)x = x` and `(yx)y = y`.
//! Predicates are total and answer `false` when a structural prerequisite
//! fails; only the operations that must produce a structure
//! ([`inverse_table`], [`canonical_alpha`], [`antihom_inverse_condition`])
//! return errors.

use crate::error::{Error, Result};
use crate::groupoid::{Element, ElementSet, Groupoid};
use crate::morphisms::Mapping;

/// `inv[x]` is the unique inverse of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseTable {
    inv: Vec<Element>,
}

impl InverseTable {
    #[inline]
    pub fn inverse(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.inv
    }

    pub fn as_mapping(&self) -> Mapping {
        Mapping::new(self.inv.clone())
    }
}

fn is_inverse_pair(g: &Groupoid, x: Element, y: Element) -> bool {
    g.product(g.product(x, y), x) == x && g.product(g.product(y, x), y) == y
}

/// All `y` with `(xy)x = x` and `(yx)y = y`.
pub fn inverses_of(g: &Groupoid, x: Element) -> ElementSet {
    ElementSet::from_sorted(g.elements().filter(|&y| is_inverse_pair(g, x, y)).collect())
}

pub fn inverse_table(g: &Groupoid) -> Result<InverseTable> {
    let mut inv = Vec::with_capacity(g.order());
    for x in g.elements() {
        let mut found = None;
        let mut count = 0;
        for y in g.elements() {
            if is_inverse_pair(g, x, y) {
                count += 1;
                found.get_or_insert(y);
            }
        }
        match (count, found) {
            (1, Some(y)) => inv.push(y),
            _ => return Err(Error::NotInverse { element: x, count }),
        }
    }
    Ok(InverseTable { inv })
}

pub fn is_inverse(g: &Groupoid) -> bool {
    inverse_table(g).is_ok()
}

/// Inverse, and `xx⁻¹ = x⁻¹x` is idempotent for every `x`.
pub fn is_completely_inverse(g: &Groupoid) -> bool {
    match inverse_table(g) {
        Ok(t) => completely_inverse_with(g, &t),
        Err(_) => false,
    }
}

pub(crate) fn completely_inverse_with(g: &Groupoid, t: &InverseTable) -> bool {
    g.elements().all(|x| {
        let xi = t.inverse(x);
        let e = g.product(x, xi);
        e == g.product(xi, x) && g.is_idempotent(e)
    })
}

/// `((xy)z)w = x((yz)w)` for every quadruple.
pub fn is_right_bol(g: &Groupoid) -> bool {
    first_right_bol_failure(g).is_none()
}

pub fn first_right_bol_failure(g: &Groupoid) -> Option<[Element; 4]> {
    for x in g.elements() {
        for y in g.elements() {
            let xy = g.product(x, y);
            for z in g.elements() {
                let xyz = g.product(xy, z);
                let yz = g.product(y, z);
                for w in g.elements() {
                    if g.product(xyz, w) != g.product(x, g.product(yz, w)) {
                        return Some([x, y, z, w]);
                    }
                }
            }
        }
    }
    None
}

/// For every `a`, the first `x` with `a = (ax)a` and `ax = xa ∈ E(S)`.
pub fn strongly_regular_witness(g: &Groupoid) -> Option<Mapping> {
    g.elements()
        .map(|a| {
            g.elements().find(|&x| {
                let ax = g.product(a, x);
                g.product(ax, a) == a && ax == g.product(x, a) && g.is_idempotent(ax)
            })
        })
        .collect::<Option<Vec<_>>>()
        .map(Mapping::new)
}

pub fn is_strongly_regular(g: &Groupoid) -> bool {
    strongly_regular_witness(g).is_some()
}

/// `E(S)` is closed, commutative and associative under the product. An empty
/// `E(S)` counts as a degenerate semilattice.
pub fn idempotents_form_semilattice(g: &Groupoid) -> bool {
    let e = g.idempotents();
    match g.restrict(&e) {
        Ok(sub) => sub.groupoid.is_commutative() && sub.groupoid.is_associative(),
        Err(_) => false,
    }
}

/// `(ab)⁻¹ = (α b⁻¹)(α a⁻¹)` for all `a, b`.
pub fn antihom_inverse_condition(g: &Groupoid, alpha: &Mapping) -> Result<bool> {
    let t = inverse_table(g)?;
    Ok(antihom_with(g, &t, alpha))
}

pub(crate) fn antihom_with(g: &Groupoid, t: &InverseTable, alpha: &Mapping) -> bool {
    g.elements().all(|a| {
        g.elements().all(|b| {
            t.inverse(g.product(a, b))
                == g.product(alpha.apply(t.inverse(b)), alpha.apply(t.inverse(a)))
        })
    })
}

/// The map `a ↦ a(aa⁻¹)`.
pub fn canonical_alpha(g: &Groupoid) -> Result<Mapping> {
    let t = inverse_table(g)?;
    Ok(canonical_alpha_with(g, &t))
}

pub(crate) fn canonical_alpha_with(g: &Groupoid, t: &InverseTable) -> Mapping {
    Mapping::new(
        g.elements()
            .map(|a| g.product(a, g.product(a, t.inverse(a))))
            .collect(),
    )
}

/// `(ab)c = (αa)(bc)` for every triple.
pub fn satisfies_triple_law(g: &Groupoid, alpha: &Mapping) -> bool {
    first_triple_law_failure(g, alpha).is_none()
}

pub fn first_triple_law_failure(g: &Groupoid, alpha: &Mapping) -> Option<[Element; 3]> {
    for a in g.elements() {
        let aa = alpha.apply(a);
        for b in g.elements() {
            let ab = g.product(a, b);
            for c in g.elements() {
                if g.product(ab, c) != g.product(aa, g.product(b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn inverse_sets() {
        let tw = fixtures::z3_twist();
        assert_eq!(inverses_of(&tw, 1).as_slice(), &[1]);
        assert_eq!(inverses_of(&fixtures::two_chain(), 0).as_slice(), &[0]);
        // brute force: both candidates are inverses of a, so a has no unique inverse
        assert_eq!(inverses_of(&fixtures::two_element_swap(), 0).as_slice(), &[0, 1]);
    }

    #[test]
    fn inverse_tables() {
        assert_eq!(inverse_table(&fixtures::z3_twist()).unwrap().as_slice(), &[0, 1, 2]);
        assert_eq!(inverse_table(&fixtures::two_chain()).unwrap().as_slice(), &[0, 1]);
        assert_eq!(
            inverse_table(&fixtures::two_element_swap()),
            Err(Error::NotInverse { element: 0, count: 2 })
        );
        // left-zero: every y is an inverse of x
        assert_eq!(
            inverse_table(&fixtures::left_zero(2)),
            Err(Error::NotInverse { element: 0, count: 2 })
        );
    }

    #[test]
    fn complete_inverse() {
        assert!(is_completely_inverse(&fixtures::z3_twist()));
        assert!(is_completely_inverse(&fixtures::two_chain()));
        assert!(!is_completely_inverse(&fixtures::two_element_swap()));
    }

    #[test]
    fn right_bol() {
        assert!(is_right_bol(&Groupoid::cyclic(4)));
        assert!(is_right_bol(&fixtures::z3_twist()));
        // "1 0 / 0 0": first failing quadruple found by an independent brute-force script
        let g = Groupoid::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(!is_right_bol(&g));
        assert_eq!(first_right_bol_failure(&g), Some([0, 0, 0, 1]));
    }

    #[test]
    fn strong_regularity() {
        assert_eq!(strongly_regular_witness(&fixtures::two_chain()), Some(Mapping::identity(2)));
        let w = strongly_regular_witness(&fixtures::z3_twist()).unwrap();
        assert_eq!(w.apply(1), 1);
        assert_eq!(strongly_regular_witness(&fixtures::two_element_swap()), None);
    }

    #[test]
    fn semilattice_of_idempotents() {
        assert!(idempotents_form_semilattice(&fixtures::two_chain()));
        assert!(!idempotents_form_semilattice(&fixtures::three_element_band()));
        assert!(idempotents_form_semilattice(&fixtures::z3_twist()));
        assert!(idempotents_form_semilattice(&fixtures::two_element_swap()));
    }

    #[test]
    fn antihom_condition() {
        let chain = fixtures::two_chain();
        assert!(antihom_inverse_condition(&chain, &Mapping::identity(2)).unwrap());
        let tw = fixtures::z3_twist();
        assert!(antihom_inverse_condition(&tw, &fixtures::negation(3)).unwrap());
        // with the identity: (ab)⁻¹ = b − a, b⁻¹a⁻¹ = a − b
        assert!(!antihom_inverse_condition(&tw, &Mapping::identity(3)).unwrap());
        assert!(antihom_inverse_condition(&fixtures::two_element_swap(), &Mapping::identity(2)).is_err());
    }

    #[test]
    fn canonical_alphas() {
        assert_eq!(canonical_alpha(&fixtures::two_chain()).unwrap(), Mapping::identity(2));
        assert_eq!(canonical_alpha(&fixtures::z3_twist()).unwrap(), fixtures::negation(3));
        assert_eq!(canonical_alpha(&Groupoid::cyclic(3)).unwrap(), Mapping::identity(3));
    }
}
