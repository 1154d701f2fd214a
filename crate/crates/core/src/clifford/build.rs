//! Building groupoids from construction data, and recovering the data from a
//! determined groupoid.

use crate::determination::{is_semilattice_of_groups, untwist};
use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid};
use crate::inverse::inverse_table;
use crate::morphisms::{is_involutive_automorphism, Mapping};

use super::spec::{validate_spec, ConstructionSpec, GroupSpec, HomSystem, MeetSemilattice};

/// Global element `x` as `(block, local index)`.
fn locate(offsets: &[usize], x: Element) -> (usize, Element) {
    let e = offsets.partition_point(|&start| start <= x) - 1;
    (e, x - offsets[e])
}

fn build_with(spec: &ConstructionSpec, twisted: bool) -> Result<Groupoid> {
    validate_spec(spec).into_result()?;
    let offsets = spec.offsets();
    let blocks: Vec<(usize, Element)> = (0..spec.total_order()).map(|x| locate(&offsets, x)).collect();
    Groupoid::from_fn(spec.total_order(), |a, b| {
        let ((e, i), (f, j)) = (blocks[a], blocks[b]);
        let m = spec.semilattice.meet(e, f);
        let group = &spec.groups[m];
        let (i, j) = (spec.homs.push_down(e, m, i), spec.homs.push_down(f, m, j));
        let product = if twisted { group.twisted_product(i, j) } else { group.table.product(i, j) };
        offsets[m] + product
    })
}

/// The strong semilattice of groups `{G, *}` with
/// `a * b = (a δ_{e,ef}) ∘ (b δ_{f,ef})`.
pub fn build_strong_slg(spec: &ConstructionSpec) -> Result<Groupoid> {
    build_with(spec, false)
}

/// The determined groupoid `ab = (a δ_{e,ef})(b δ_{f,ef})`, the product on
/// the right taken in `S(ef)`, together with the glued automorphism
/// `α = ∪ α_e`.
pub fn build_determined(spec: &ConstructionSpec) -> Result<(Groupoid, Mapping)> {
    let g = build_with(spec, true)?;
    Ok((g, glued_alpha(spec)))
}

/// `α = ∪ α_e` in the global numbering.
pub fn glued_alpha(spec: &ConstructionSpec) -> Mapping {
    let offsets = spec.offsets();
    Mapping::new(
        spec.groups
            .iter()
            .zip(&offsets)
            .flat_map(|(g, &start)| g.alpha.image().iter().map(move |&a| start + a))
            .collect(),
    )
}

/// Construction data recovered from a determined groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: ConstructionSpec,
    /// `labels[x]` is the global index of `x` in the spec's numbering, so
    /// `S.relabel(labels)` equals the groupoid built from `spec`.
    pub labels: Mapping,
}

impl Decomposition {
    /// The inverse of `labels`: `S = built.relabel(unlabels)`.
    pub fn unlabels(&self) -> Mapping {
        let mut inv = vec![0; self.labels.len()];
        for (x, &l) in self.labels.image().iter().enumerate() {
            inv[l] = x;
        }
        Mapping::new(inv)
    }
}

/// Recovers the semilattice, the twisted groups and the connecting maps of a
/// groupoid determined by a semilattice of groups and `α`.
///
/// The semilattice is `E(S)` in ascending element order; each class
/// `S(e) = {a : aa⁻¹ = e}` is numbered with `e` first and the rest in
/// ascending order; `G(e)` is the untwisted product restricted to `S(e)`;
/// `b δ_{f,e} = eb`.
pub fn decompose(s: &Groupoid, alpha: &Mapping) -> Result<Decomposition> {
    let n = s.order();
    if !alpha.is_self_map_of(n) || !alpha.is_involution() {
        return Err(Error::NotDetermined(format!("α is not an involution on {n} elements")));
    }
    let star = untwist(s, alpha)?;
    if !is_semilattice_of_groups(&star) {
        return Err(Error::NotDetermined("untwisting by α gives no semilattice of groups".into()));
    }
    if !is_involutive_automorphism(alpha, &star) || !alpha.fixes_all(star.idempotents().iter()) {
        return Err(Error::NotDetermined("α is not an idempotent-fixed automorphism of the untwisted product".into()));
    }

    let violation = |what: &str| Error::TheoremViolation(format!("decomposition of a determined groupoid: {what}"));
    let idempotents: Vec<Element> = s.idempotents().iter().collect();
    let index_of = |x: Element| idempotents.binary_search(&x).ok();
    let k = idempotents.len();
    let meet = Groupoid::from_fn(k, |i, j| index_of(s.product(idempotents[i], idempotents[j])).unwrap_or(usize::MAX))
        .map_err(|_| violation("E(S) is not closed"))?;

    let inverses = inverse_table(s).map_err(|_| violation("S is not inverse"))?;
    let mut class_of = vec![0; n];
    let mut classes: Vec<Vec<Element>> = idempotents.iter().map(|&e| vec![e]).collect();
    for (a, slot) in class_of.iter_mut().enumerate() {
        let e = index_of(s.product(a, inverses.inverse(a))).ok_or_else(|| violation("aa⁻¹ is not idempotent"))?;
        *slot = e;
        if a != idempotents[e] {
            classes[e].push(a);
        }
    }
    let local = |a: Element| classes[class_of[a]].iter().position(|&x| x == a).expect("a lies in its class");

    let mut groups = Vec::with_capacity(k);
    for class in &classes {
        let m = class.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in class {
            for &b in class {
                let p = star.product(a, b);
                if class_of[p] != class_of[a] {
                    return Err(violation("a class is not closed"));
                }
                table.push(local(p));
            }
        }
        let alpha_e = class
            .iter()
            .map(|&a| (class_of[alpha.apply(a)] == class_of[a]).then(|| local(alpha.apply(a))))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| violation("α does not preserve a class"))?;
        groups.push(GroupSpec::new(Groupoid::new(m, table)?, Mapping::new(alpha_e)));
    }

    let semilattice = MeetSemilattice::new(meet);
    let mut homs = HomSystem::new();
    for (f, e) in semilattice.strict_pairs() {
        let image = classes[f]
            .iter()
            .map(|&b| {
                let eb = s.product(idempotents[e], b);
                (class_of[eb] == e).then(|| local(eb))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| violation("eb leaves S(e)"))?;
        homs.insert(f, e, Mapping::new(image));
    }

    let spec = ConstructionSpec { semilattice, groups, homs };
    if let Some(v) = validate_spec(&spec).violations.first() {
        return Err(violation(&v.message));
    }
    let offsets = spec.offsets();
    let labels = Mapping::new((0..n).map(|a| offsets[class_of[a]] + local(a)).collect());
    Ok(Decomposition { spec, labels })
}
