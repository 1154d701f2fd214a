//! Construction data: a meet semilattice, one twisted group per semilattice
//! element, and a transitive system of connecting homomorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid};
use crate::morphisms::Mapping;
use crate::text::{parse_usize, write_row, LineReader};

/// A finite meet semilattice given by its meet table; `e ≤ f` iff `ef = e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeetSemilattice {
    meet: Groupoid,
}

impl MeetSemilattice {
    /// Wraps a table without checking the semilattice laws; see
    /// [`validate_spec`].
    pub fn new(meet: Groupoid) -> Self {
        MeetSemilattice { meet }
    }

    /// The chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Self {
        MeetSemilattice::new(Groupoid::from_fn(k, |e, f| e.min(f)).expect("k > 0"))
    }

    pub fn order(&self) -> usize {
        self.meet.order()
    }

    pub fn table(&self) -> &Groupoid {
        &self.meet
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.meet.product(e, f)
    }

    /// `e ≤ f`.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.meet(e, f) == e
    }

    /// All pairs `(f, e)` with `f > e`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.order();
        (0..k)
            .flat_map(|f| (0..k).map(move |e| (f, e)))
            .filter(|&(f, e)| f != e && self.leq(e, f))
            .collect()
    }
}

/// A group on `0..m` with identity 0, together with an involutive
/// automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub table: Groupoid,
    pub alpha: Mapping,
}

impl GroupSpec {
    pub fn new(table: Groupoid, alpha: Mapping) -> Self {
        GroupSpec { table, alpha }
    }

    /// The group with its identity automorphism.
    pub fn untwisted(table: Groupoid) -> Self {
        let alpha = Mapping::identity(table.order());
        GroupSpec { table, alpha }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// The product of the determined groupoid, `ab = α(a)∘b`.
    #[inline]
    pub fn twisted_product(&self, a: Element, b: Element) -> Element {
        self.table.product(self.alpha.apply(a), b)
    }
}

/// The maps `δ_{f,e}` for `f > e`, acting on local indices. `δ_{e,e}` is the
/// identity and is not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomSystem {
    maps: BTreeMap<(usize, usize), Mapping>,
}

impl HomSystem {
    pub fn new() -> Self {
        HomSystem::default()
    }

    pub fn insert(&mut self, f: usize, e: usize, delta: Mapping) {
        self.maps.insert((f, e), delta);
    }

    /// `δ_{f,e}` for a stored strict pair.
    pub fn get(&self, f: usize, e: usize) -> Option<&Mapping> {
        self.maps.get(&(f, e))
    }

    /// `b δ_{f,e}`, treating `δ_{e,e}` as the identity.
    ///
    /// # Panics
    /// If `f ≠ e` and no map is stored for the pair.
    #[inline]
    pub fn push_down(&self, f: usize, e: usize, b: Element) -> Element {
        if f == e {
            b
        } else {
            self.maps[&(f, e)].apply(b)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Mapping)> {
        self.maps.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Everything needed to build a groupoid determined by a strong semilattice
/// of groups.
///
/// Carriers are numbered globally block by block in semilattice index order,
/// so the element with local index `i` in `G(e)` is `offsets()[e] + i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub semilattice: MeetSemilattice,
    pub groups: Vec<GroupSpec>,
    pub homs: HomSystem,
}

impl ConstructionSpec {
    /// A one-block spec: a single twisted group.
    pub fn single(group: GroupSpec) -> Self {
        ConstructionSpec {
            semilattice: MeetSemilattice::chain(1),
            groups: vec![group],
            homs: HomSystem::new(),
        }
    }

    /// Start of each block in the global numbering.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.groups
            .iter()
            .map(|g| {
                let start = acc;
                acc += g.order();
                start
            })
            .collect()
    }

    pub fn total_order(&self) -> usize {
        self.groups.iter().map(GroupSpec::order).sum()
    }

    /// Serializes to the `.cspec` text format.
    pub fn to_cspec(&self) -> String {
        let k = self.semilattice.order();
        let mut out = format!("semilattice {k}\n");
        for row in self.semilattice.table().rows() {
            write_row(&mut out, &row);
        }
        for (e, g) in self.groups.iter().enumerate() {
            out.push_str(&format!("group {e} {}\n", g.order()));
            for row in g.table.rows() {
                write_row(&mut out, &row);
            }
            out.push_str(&format!("alpha {e}\n"));
            write_row(&mut out, g.alpha.image());
        }
        for (f, e) in self.semilattice.strict_pairs() {
            out.push_str(&format!("hom {f} {e}\n"));
            if let Some(delta) = self.homs.get(f, e) {
                write_row(&mut out, delta.image());
            }
        }
        out
    }

    /// Parses the `.cspec` text format. Only the shape is checked here; the
    /// algebraic conditions are left to [`validate_spec`].
    pub fn parse_cspec(text: &str) -> Result<Self> {
        let mut reader = LineReader::new(text);
        let k = read_header(&mut reader, "semilattice", &[])?;
        if k == 0 {
            return Err(Error::malformed(1, "semilattice must be nonempty"));
        }
        let mut meet = Vec::with_capacity(k * k);
        for _ in 0..k {
            meet.extend(reader.read_row(k, k, "a meet-table row")?);
        }
        let semilattice = MeetSemilattice::new(Groupoid::new(k, meet)?);

        let mut groups = Vec::with_capacity(k);
        for e in 0..k {
            let m = read_header(&mut reader, "group", &[e])?;
            if m == 0 {
                return Err(Error::malformed(reader.line_no() - 1, "group must be nonempty"));
            }
            let mut table = Vec::with_capacity(m * m);
            for _ in 0..m {
                table.extend(reader.read_row(m, m, "a group-table row")?);
            }
            read_tag(&mut reader, "alpha", &[e])?;
            let alpha = Mapping::new(reader.read_row(m, m, "the alpha row")?);
            groups.push(GroupSpec::new(Groupoid::new(m, table)?, alpha));
        }

        let mut homs = HomSystem::new();
        for (f, e) in semilattice.strict_pairs() {
            read_tag(&mut reader, "hom", &[f, e])?;
            let image = reader.read_row(groups[f].order(), groups[e].order(), "the hom row")?;
            homs.insert(f, e, Mapping::new(image));
        }
        reader.finish()?;
        Ok(ConstructionSpec { semilattice, groups, homs })
    }
}

/// Reads `keyword i j … n` and returns `n`.
fn read_header(reader: &mut LineReader<'_>, keyword: &str, indices: &[usize]) -> Result<usize> {
    let (no, line) = reader.next_line(&format!("a `{keyword}` header"))?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    check_tag(no, &tokens, keyword, indices, 1)?;
    parse_usize(no, tokens[tokens.len() - 1], "a size")
}

/// Reads `keyword i j …`.
fn read_tag(reader: &mut LineReader<'_>, keyword: &str, indices: &[usize]) -> Result<()> {
    let (no, line) = reader.next_line(&format!("a `{keyword}` header"))?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    check_tag(no, &tokens, keyword, indices, 0)
}

fn check_tag(no: usize, tokens: &[&str], keyword: &str, indices: &[usize], extra: usize) -> Result<()> {
    let expected = std::iter::once(keyword.to_string())
        .chain(indices.iter().map(ToString::to_string))
        .collect::<Vec<_>>()
        .join(" ");
    let matches = tokens.len() == 1 + indices.len() + extra
        && tokens[0] == keyword
        && indices.iter().zip(&tokens[1..]).all(|(i, t)| t.parse::<usize>() == Ok(*i));
    if matches {
        Ok(())
    } else {
        Err(Error::malformed(no, format!("expected `{expected}{}`, found {:?}", if extra > 0 { " <size>" } else { "" }, tokens.join(" "))))
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cspec())
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionSpec::parse_cspec(s)
    }
}

/// The condition a [`SpecViolation`] breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecCondition {
    /// The meet table is idempotent, commutative and associative.
    Semilattice,
    /// One group per semilattice element.
    GroupCount,
    /// Each table is a group with identity 0.
    Group,
    /// Each `α_e` is an involutive automorphism of its group fixing 0.
    GroupAlpha,
    /// A map is present with the right shape for exactly the pairs `f > e`.
    HomShape,
    /// `δ_{f,e}` is a homomorphism of the determined groupoids `S(f) → S(e)`.
    HomProduct,
    /// `α_e(b δ_{f,e}) = (α_f b) δ_{f,e}`.
    Compatibility,
    /// `δ_{g,f} δ_{f,e} = δ_{g,e}` for `g > f > e`.
    Transitivity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecViolation {
    pub condition: SpecCondition,
    /// The witnessing tuple; its layout is described by `message`.
    pub witness: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SpecValidation {
    pub violations: Vec<SpecViolation>,
}

impl SpecValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, condition: SpecCondition, witness: Vec<usize>, message: String) {
        self.violations.push(SpecViolation { condition, witness, message });
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidSpec(v.message)),
        }
    }
}

/// Checks every condition the construction relies on. Later checks are
/// skipped when an earlier failure would make them meaningless.
pub fn validate_spec(spec: &ConstructionSpec) -> SpecValidation {
    use SpecCondition::*;
    let mut report = SpecValidation::default();
    let sl = &spec.semilattice;
    let k = sl.order();

    let meet = sl.table();
    if let Some(e) = (0..k).find(|&e| !meet.is_idempotent(e)) {
        report.push(Semilattice, vec![e], format!("meet is not idempotent at e={e}"));
    } else if let Some((e, f)) = pairs(k).find(|&(e, f)| meet.product(e, f) != meet.product(f, e)) {
        report.push(Semilattice, vec![e, f], format!("meet is not commutative at (e, f) = ({e}, {f})"));
    } else if let Some((e, f, g)) = meet.first_non_associative_triple() {
        report.push(Semilattice, vec![e, f, g], format!("meet is not associative at (e, f, g) = ({e}, {f}, {g})"));
    }
    if spec.groups.len() != k {
        report.push(
            GroupCount,
            vec![k, spec.groups.len()],
            format!("{} groups given for {k} semilattice elements", spec.groups.len()),
        );
    }
    if !report.is_valid() {
        return report;
    }

    let mut usable = vec![true; k];
    for (e, g) in spec.groups.iter().enumerate() {
        if let Some((message, mut witness)) = group_failure(&g.table) {
            witness.insert(0, e);
            report.push(Group, witness, format!("G({e}): {message}"));
        }
        let m = g.order();
        if !g.alpha.is_self_map_of(m) {
            report.push(GroupAlpha, vec![e], format!("alpha {e} is not a map on {m} elements"));
            usable[e] = false;
        } else if !g.alpha.is_involution() {
            report.push(GroupAlpha, vec![e], format!("alpha {e} is not an involution"));
        } else if g.alpha.apply(0) != 0 {
            report.push(GroupAlpha, vec![e], format!("alpha {e} moves the identity"));
        } else if let Some((a, b)) = crate::morphisms::first_homomorphism_failure(&g.alpha, &g.table, &g.table) {
            report.push(GroupAlpha, vec![e, a, b], format!("alpha {e} is not an automorphism at (a, b) = ({a}, {b})"));
        }
    }

    let strict = sl.strict_pairs();
    for ((f, e), _) in spec.homs.iter() {
        if f >= k || e >= k || f == e || !sl.leq(e, f) {
            report.push(HomShape, vec![f, e], format!("hom {f} {e} given for a pair without {f} > {e}"));
        }
    }
    let mut hom_ok = BTreeMap::new();
    for &(f, e) in &strict {
        let ok = match spec.homs.get(f, e) {
            None => {
                report.push(HomShape, vec![f, e], format!("hom {f} {e} is missing"));
                false
            }
            Some(d) if d.len() != spec.groups[f].order()
                || d.image().iter().any(|&v| v >= spec.groups[e].order()) =>
            {
                report.push(HomShape, vec![f, e], format!("hom {f} {e} does not map G({f}) into G({e})"));
                false
            }
            Some(_) => usable[f] && usable[e],
        };
        hom_ok.insert((f, e), ok);
    }

    for &(f, e) in &strict {
        if !hom_ok[&(f, e)] {
            continue;
        }
        let d = spec.homs.get(f, e).expect("checked above");
        let (gf, ge) = (&spec.groups[f], &spec.groups[e]);
        let m = gf.order();
        if let Some((a, b)) = pairs(m).find(|&(a, b)| {
            d.apply(gf.twisted_product(a, b)) != ge.twisted_product(d.apply(a), d.apply(b))
        }) {
            report.push(
                HomProduct,
                vec![f, e, a, b],
                format!("hom {f} {e} is not a homomorphism S({f}) -> S({e}) at (a, b) = ({a}, {b})"),
            );
        }
        if let Some(b) = (0..m).find(|&b| ge.alpha.apply(d.apply(b)) != d.apply(gf.alpha.apply(b))) {
            report.push(
                Compatibility,
                vec![f, e, b],
                format!("hom {f} {e} does not commute with alpha at b = {b}"),
            );
        }
    }

    for &(g, f) in &strict {
        for &(f2, e) in &strict {
            if f2 != f || !hom_ok[&(g, f)] || !hom_ok[&(f, e)] || !hom_ok.get(&(g, e)).copied().unwrap_or(false) {
                continue;
            }
            let (dgf, dfe, dge) = (&spec.homs.maps[&(g, f)], &spec.homs.maps[&(f, e)], &spec.homs.maps[&(g, e)]);
            if let Some(a) = (0..spec.groups[g].order()).find(|&a| dfe.apply(dgf.apply(a)) != dge.apply(a)) {
                report.push(
                    Transitivity,
                    vec![g, f, e, a],
                    format!("homs {g} {f} then {f} {e} differ from hom {g} {e} at a = {a}"),
                );
            }
        }
    }
    report
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// The first reason `g` is not a group with identity 0, with its witness.
pub(crate) fn group_failure(g: &Groupoid) -> Option<(String, Vec<usize>)> {
    let n = g.order();
    if let Some(a) = (0..n).find(|&a| g.product(0, a) != a || g.product(a, 0) != a) {
        return Some((format!("0 is not an identity for {a}"), vec![a]));
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| g.product(a, b) == 0 && g.product(b, a) == 0)) {
        return Some((format!("{a} has no inverse"), vec![a]));
    }
    if let Some((a, b, c)) = g.first_non_associative_triple() {
        return Some((format!("not associative at ({a}, {b}, {c})"), vec![a, b, c]));
    }
    None
}
