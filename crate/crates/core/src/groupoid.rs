//! Finite groupoids stored as Cayley tables.
//!
//! Elements are the indices `0..n`. The table is row-major with the row
//! holding the left operand, so `table[x * n + y]` is the product `xy`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{write_row, LineReader};

/// An element of a finite groupoid, identified by its index.
pub type Element = usize;

/// A finite magma given by its full multiplication table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Groupoid {
    order: usize,
    table: Vec<Element>,
}

impl Groupoid {
    /// Builds a groupoid from a row-major table of `order * order` entries.
    pub fn new(order: usize, table: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::malformed(1, "order must be positive"));
        }
        if table.len() != order * order {
            return Err(Error::malformed(
                1,
                format!("expected {} entries, found {}", order * order, table.len()),
            ));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::malformed(1, format!("entry {bad} out of range")));
        }
        Ok(Groupoid { order, table })
    }

    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::malformed(1, "table is not square"));
        }
        Groupoid::new(order, rows.concat())
    }

    pub fn from_fn(order: usize, mut op: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(op(x, y));
            }
        }
        Groupoid::new(order, table)
    }

    /// Caller guarantees every entry is below `order`.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<Element>) -> Self {
        debug_assert!(table.len() == order * order && table.iter().all(|&v| v < order));
        Groupoid { order, table }
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic(order: usize) -> Self {
        Groupoid::from_table_unchecked(
            order,
            (0..order * order).map(|i| (i / order + i % order) % order).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// The product `xy`.
    #[inline]
    pub fn product(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Evaluates a word left-associated: `[x, y, z]` is `(xy)z`.
    pub fn eval_left(&self, word: &[Element]) -> Element {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &w| self.product(acc, w))
    }

    pub fn is_associative(&self) -> bool {
        self.first_non_associative_triple().is_none()
    }

    pub fn first_non_associative_triple(&self) -> Option<(Element, Element, Element)> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.product(x, y);
                for z in self.elements() {
                    if self.product(xy, z) != self.product(x, self.product(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.order).all(|y| self.product(x, y) == self.product(y, x)))
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.product(x, x) == x
    }

    /// `E(S)`, the idempotents in increasing order.
    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_sorted(self.elements().filter(|&x| self.is_idempotent(x)).collect())
    }

    /// The set of all products `S² = {xy}`.
    pub fn square_set(&self) -> ElementSet {
        let mut seen = vec![false; self.order];
        for &v in &self.table {
            seen[v] = true;
        }
        ElementSet::from_sorted(self.elements().filter(|&x| seen[x]).collect())
    }

    /// The subgroupoid induced on `members`, re-indexed in increasing order.
    ///
    /// Fails with [`Error::NotClosed`] if a product of two members leaves the set.
    pub fn restrict(&self, members: &ElementSet) -> Result<SubGroupoid> {
        let elements = members.as_slice().to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            local[x] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in &elements {
            for &y in &elements {
                let p = local[self.product(x, y)];
                if p == usize::MAX {
                    return Err(Error::NotClosed);
                }
                table.push(p);
            }
        }
        Ok(SubGroupoid {
            groupoid: Groupoid::from_table_unchecked(k, table),
            elements,
        })
    }

    /// `S²` as a groupoid in its own right.
    ///
    /// `S²` is always closed (a product of two members is a product of two
    /// elements of `S`), so the `NotClosed` path exists only for callers that
    /// hand-build tables through [`Groupoid::restrict`].
    pub fn square_subgroupoid(&self) -> Result<SubGroupoid> {
        self.restrict(&self.square_set())
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Element]) -> Result<Groupoid> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::OrderMismatch { left: n, right: perm.len() });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::PreconditionViolated("relabeling is not a permutation".into()));
            }
        }
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.product(x, y)];
            }
        }
        Ok(Groupoid::from_table_unchecked(n, table))
    }

    /// Serializes to the `.gpd` text format.
    pub fn to_gpd(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            write_row(&mut out, row);
        }
        out
    }

    /// Parses the `.gpd` text format: the order on the first line, then one
    /// row of space-separated 0-based entries per line.
    pub fn parse_gpd(text: &str) -> Result<Self> {
        let mut reader = LineReader::new(text);
        let n = reader.read_count("the order")?;
        if n == 0 {
            return Err(Error::malformed(1, "order must be positive"));
        }
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            table.extend(reader.read_row(n, n, "a table row")?);
        }
        reader.finish()?;
        Ok(Groupoid { order: n, table })
    }
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Groupoid({})", self.rows().iter().map(|r| {
            r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        }).collect::<Vec<_>>().join(" / "))
    }
}

impl fmt::Display for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_gpd())
    }
}

impl FromStr for Groupoid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Groupoid::parse_gpd(s)
    }
}

/// A subset of a groupoid's carrier, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet {
    members: Vec<Element>,
}

impl ElementSet {
    pub fn from_sorted(members: Vec<Element>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        ElementSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut members: Vec<_> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }
}

/// A subgroupoid re-indexed to `0..k`, with the embedding back into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubGroupoid {
    pub groupoid: Groupoid,
    /// `elements[i]` is the parent element that local index `i` stands for.
    pub elements: Vec<Element>,
}
