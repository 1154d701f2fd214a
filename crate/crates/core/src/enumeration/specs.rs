//! Enumeration of construction data: small semilattices and groups up to
//! isomorphism, their involutive automorphisms, and every admissible system
//! of connecting homomorphisms.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::clifford::{ConstructionSpec, GroupSpec, HomSystem, MeetSemilattice};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::morphisms::{find_isomorphism, involutive_automorphisms, search_homomorphisms, Mapping};

/// Largest semilattice order the family supports.
pub const MAX_SEMILATTICE_ORDER: usize = 3;
/// Largest group order of the standard family.
pub const MAX_GROUP_ORDER: usize = 4;
/// Largest group order with the extended family, which adds `Z5`, `Z6` and
/// the non-abelian `S3`.
pub const MAX_EXTENDED_GROUP_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpecLimits {
    pub max_semilattice_order: usize,
    pub max_group_order: usize,
    /// Permits group orders up to [`MAX_EXTENDED_GROUP_ORDER`].
    pub extended: bool,
}

impl SpecLimits {
    pub fn new(max_semilattice_order: usize, max_group_order: usize) -> Self {
        SpecLimits { max_semilattice_order, max_group_order, extended: false }
    }

    pub fn extended(max_semilattice_order: usize, max_group_order: usize) -> Self {
        SpecLimits { max_semilattice_order, max_group_order, extended: true }
    }

    /// Refuses zero limits and limits beyond the supported maxima.
    pub fn check(&self) -> Result<()> {
        let group_limit = if self.extended { MAX_EXTENDED_GROUP_ORDER } else { MAX_GROUP_ORDER };
        if self.max_semilattice_order == 0 || self.max_group_order == 0 {
            return Err(Error::LimitsTooLarge("limits must be positive".into()));
        }
        if self.max_semilattice_order > MAX_SEMILATTICE_ORDER {
            return Err(Error::LimitsTooLarge(format!(
                "semilattice order {} exceeds {MAX_SEMILATTICE_ORDER}",
                self.max_semilattice_order
            )));
        }
        if self.max_group_order > group_limit {
            return Err(Error::LimitsTooLarge(format!(
                "group order {} exceeds {group_limit}{}",
                self.max_group_order,
                if self.extended { "" } else { " (use the extended family for orders 5 and 6)" }
            )));
        }
        Ok(())
    }
}

impl Default for SpecLimits {
    fn default() -> Self {
        SpecLimits::new(MAX_SEMILATTICE_ORDER, MAX_GROUP_ORDER)
    }
}

/// Keeps the first of each isomorphism class, preserving order.
fn dedup_isomorphic(tables: impl IntoIterator<Item = Groupoid>) -> Vec<Groupoid> {
    let mut reps: Vec<Groupoid> = Vec::new();
    for t in tables {
        if !reps.iter().any(|r| find_isomorphism(r, &t).is_some()) {
            reps.push(t);
        }
    }
    reps
}

/// One meet semilattice per isomorphism class of order `k`: the
/// lexicographically first table of each class.
pub fn semilattices(k: usize) -> Vec<MeetSemilattice> {
    // free entries: the strict upper triangle
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|e| (e + 1..k).map(move |f| (e, f))).collect();
    let mut tables = Vec::new();
    let mut digits = vec![0usize; cells.len()];
    loop {
        let mut table = vec![0; k * k];
        for e in 0..k {
            table[e * k + e] = e;
        }
        for (&(e, f), &v) in cells.iter().zip(&digits) {
            table[e * k + f] = v;
            table[f * k + e] = v;
        }
        let g = Groupoid::new(k, table).expect("entries below k");
        if g.is_associative() {
            tables.push(g);
        }
        if !advance(&mut digits, k) {
            break;
        }
    }
    tables.sort();
    dedup_isomorphic(tables).into_iter().map(MeetSemilattice::new).collect()
}

/// Counts up `digits` in base `radix`, most significant digit last; returns
/// `false` after the last combination.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// One group of order `m` per isomorphism class, identity 0, found by
/// backtracking over Latin squares with first row and column fixed.
pub fn groups(m: usize) -> Vec<Groupoid> {
    let mut found = Vec::new();
    let mut table = vec![usize::MAX; m * m];
    for x in 0..m {
        table[x] = x;
        table[x * m] = x;
    }
    fill_latin(&mut table, m, m + 1, &mut found);
    dedup_isomorphic(found)
}

fn fill_latin(table: &mut [usize], m: usize, cell: usize, out: &mut Vec<Groupoid>) {
    if cell >= m * m {
        let g = Groupoid::new(m, table.to_vec()).expect("complete Latin square");
        if g.is_associative() {
            out.push(g);
        }
        return;
    }
    let (r, c) = (cell / m, cell % m);
    if c == 0 {
        return fill_latin(table, m, cell + 1, out);
    }
    for v in 0..m {
        let clash = (0..c).any(|j| table[r * m + j] == v) || (0..r).any(|i| table[i * m + c] == v);
        if !clash {
            table[cell] = v;
            fill_latin(table, m, cell + 1, out);
        }
    }
    table[cell] = usize::MAX;
}

/// Every group up to the limit, each paired with each of its involutive
/// automorphisms, in order of group order.
fn twisted_groups(max_order: usize) -> Vec<GroupSpec> {
    (1..=max_order)
        .flat_map(groups)
        .flat_map(|g| {
            involutive_automorphisms(&g)
                .into_iter()
                .map(move |alpha| GroupSpec::new(g.clone(), alpha))
        })
        .collect()
}

/// Candidate `δ_{f,e}`: group homomorphisms `G(f) → G(e)` commuting with
/// the involutions. Together these make `δ` a homomorphism of the twisted
/// groupoids.
fn compatible_homs(from: &GroupSpec, to: &GroupSpec) -> Vec<Mapping> {
    let mut out = Vec::new();
    search_homomorphisms::<()>(&from.table, &to.table, false, |d| {
        if (0..from.order()).all(|b| to.alpha.apply(d.apply(b)) == d.apply(from.alpha.apply(b))) {
            out.push(d.clone());
        }
        ControlFlow::Continue(())
    });
    out
}

/// Every valid construction spec within `limits`: semilattices of order at
/// most `max_semilattice_order` up to isomorphism, each element carrying any
/// group up to `max_group_order` with any of its involutive automorphisms,
/// and every transitive compatible homomorphism system.
pub fn enumerate_specs(limits: SpecLimits) -> Result<Vec<ConstructionSpec>> {
    limits.check()?;
    let pool = twisted_groups(limits.max_group_order);
    let mut out = Vec::new();
    for k in 1..=limits.max_semilattice_order {
        for sl in semilattices(k) {
            let mut choice = vec![0usize; k];
            loop {
                let groups: Vec<GroupSpec> = choice.iter().map(|&i| pool[i].clone()).collect();
                hom_systems(&sl, &groups, &mut out);
                if !advance(&mut choice, pool.len()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn hom_systems(sl: &MeetSemilattice, groups: &[GroupSpec], out: &mut Vec<ConstructionSpec>) {
    let pairs = sl.strict_pairs();
    let candidates: Vec<Vec<Mapping>> = pairs
        .iter()
        .map(|&(f, e)| compatible_homs(&groups[f], &groups[e]))
        .collect();
    let mut homs = HomSystem::new();
    extend_homs(sl, groups, &pairs, &candidates, 0, &mut homs, out);
}

fn extend_homs(
    sl: &MeetSemilattice,
    groups: &[GroupSpec],
    pairs: &[(usize, usize)],
    candidates: &[Vec<Mapping>],
    i: usize,
    homs: &mut HomSystem,
    out: &mut Vec<ConstructionSpec>,
) {
    if i == pairs.len() {
        out.push(ConstructionSpec {
            semilattice: sl.clone(),
            groups: groups.to_vec(),
            homs: homs.clone(),
        });
        return;
    }
    let (f, e) = pairs[i];
    for d in &candidates[i] {
        homs.insert(f, e, d.clone());
        if transitive_so_far(pairs, homs, groups, i) {
            extend_homs(sl, groups, pairs, candidates, i + 1, homs, out);
        }
    }
}

/// Every chain `g > f > e` whose three maps are all assigned among the first
/// `i + 1` pairs composes correctly.
fn transitive_so_far(pairs: &[(usize, usize)], homs: &HomSystem, groups: &[GroupSpec], i: usize) -> bool {
    let assigned = &pairs[..=i];
    assigned.iter().all(|&(g, f)| {
        assigned.iter().filter(|&&(f2, _)| f2 == f).all(|&(_, e)| {
            match (homs.get(g, f), homs.get(f, e), homs.get(g, e)) {
                (Some(gf), Some(fe), Some(ge)) if assigned.contains(&(g, e)) => {
                    (0..groups[g].order()).all(|a| fe.apply(gf.apply(a)) == ge.apply(a))
                }
                _ => true,
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::validate_spec;
    use crate::fixtures;

    #[test]
    fn semilattice_counts() {
        // 1, 1, 2 meet semilattices of orders 1, 2, 3 up to isomorphism
        assert_eq!(semilattices(1).len(), 1);
        assert_eq!(semilattices(2), vec![MeetSemilattice::chain(2)]);
        assert_eq!(semilattices(3).len(), 2);
    }

    #[test]
    fn group_counts() {
        let counts: Vec<usize> = (1..=6).map(|m| groups(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2]);
        assert_eq!(groups(3), vec![Groupoid::cyclic(3)]);
        assert!(groups(6).iter().any(|g| find_isomorphism(g, &fixtures::symmetric3()).is_some()));
        assert!(groups(4).iter().any(|g| find_isomorphism(g, &fixtures::klein_four()).is_some()));
    }

    #[test]
    fn single_groups_up_to_three() {
        let specs = enumerate_specs(SpecLimits::new(1, 3)).unwrap();
        let got: Vec<(Groupoid, Mapping)> = specs.iter().map(|s| (s.groups[0].table.clone(), s.groups[0].alpha.clone())).collect();
        assert_eq!(
            got,
            vec![
                (Groupoid::cyclic(1), Mapping::identity(1)),
                (Groupoid::cyclic(2), Mapping::identity(2)),
                (Groupoid::cyclic(3), Mapping::identity(3)),
                (Groupoid::cyclic(3), fixtures::negation(3)),
            ]
        );
    }

    #[test]
    fn klein_four_carries_four_involutive_automorphisms() {
        let specs = enumerate_specs(SpecLimits::new(1, 4)).unwrap();
        let klein = specs
            .iter()
            .filter(|s| find_isomorphism(&s.groups[0].table, &fixtures::klein_four()).is_some())
            .count();
        assert_eq!(klein, 4);
    }

    #[test]
    fn trivial_chain_has_one_spec() {
        let specs = enumerate_specs(SpecLimits::new(2, 1)).unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[1].semilattice, MeetSemilattice::chain(2));
        assert_eq!(specs[1].homs.get(1, 0), Some(&Mapping::new(vec![0])));
    }

    #[test]
    fn every_enumerated_spec_is_valid() {
        for spec in enumerate_specs(SpecLimits::new(3, 3)).unwrap() {
            assert!(validate_spec(&spec).is_valid(), "{spec}");
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(enumerate_specs(SpecLimits::new(4, 1)), Err(Error::LimitsTooLarge(_))));
        assert!(matches!(enumerate_specs(SpecLimits::new(1, 5)), Err(Error::LimitsTooLarge(_))));
        assert!(enumerate_specs(SpecLimits::extended(1, 6)).is_ok());
    }
}
