//! Self-maps of finite groupoids: involutions, automorphisms, translations
//! and isomorphisms.
//!
//! Maps act on the left, `f(x) = image[x]`. The translation classes follow
//! the naming the construction literature uses, which is swapped relative to
//! the usual convention: `LT` holds maps with `f(xy) = x·f(y)` and `RT` holds
//! maps with `f(xy) = f(x)·y`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid};
use crate::text::{write_row, LineReader};

/// A map from `0..n` to `0..m` (usually a self-map, `m = n`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mapping {
    image: Vec<Element>,
}

impl Mapping {
    pub fn new(image: Vec<Element>) -> Self {
        Mapping { image }
    }

    pub fn identity(order: usize) -> Self {
        Mapping { image: (0..order).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    pub fn into_image(self) -> Vec<Element> {
        self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Whether every image lies below `order`.
    pub fn is_self_map_of(&self, order: usize) -> bool {
        self.image.len() == order && self.image.iter().all(|&v| v < order)
    }

    /// `f(f(x)) = x` for every `x`; this forces `f` to be a bijection.
    pub fn is_involution(&self) -> bool {
        let n = self.image.len();
        self.image.iter().enumerate().all(|(x, &y)| y < n && self.image[y] == x)
    }

    /// Whether `f` fixes every element of `set`.
    pub fn fixes_all(&self, set: impl IntoIterator<Item = Element>) -> bool {
        set.into_iter().all(|e| self.image[e] == e)
    }

    pub fn to_map_text(&self) -> String {
        let mut out = format!("{}\n", self.image.len());
        write_row(&mut out, &self.image);
        out
    }

    /// Parses the `.map` format: `n` on the first line, then `n` images.
    pub fn parse_map(text: &str) -> Result<Self> {
        let mut reader = LineReader::new(text);
        let n = reader.read_count("the map length")?;
        let image = if n == 0 { Vec::new() } else { reader.read_row(n, n, "the image row")? };
        reader.finish()?;
        Ok(Mapping { image })
    }
}

impl fmt::Debug for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mapping{:?}", self.image)
    }
}

impl FromStr for Mapping {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mapping::parse_map(s)
    }
}

pub fn is_involution(f: &Mapping) -> bool {
    f.is_involution()
}

/// `f(xy) = f(x)f(y)` for every pair, with `f : G → H`.
pub fn is_homomorphism(f: &Mapping, g: &Groupoid, h: &Groupoid) -> bool {
    first_homomorphism_failure(f, g, h).is_none()
}

pub fn first_homomorphism_failure(f: &Mapping, g: &Groupoid, h: &Groupoid) -> Option<(Element, Element)> {
    if f.len() != g.order() || f.image().iter().any(|&v| v >= h.order()) {
        return Some((0, 0));
    }
    for x in g.elements() {
        for y in g.elements() {
            if f.apply(g.product(x, y)) != h.product(f.apply(x), f.apply(y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `f ∈ AUT²(G)`: an involution that is an automorphism.
pub fn is_involutive_automorphism(f: &Mapping, g: &Groupoid) -> bool {
    f.is_self_map_of(g.order()) && f.is_involution() && is_homomorphism(f, g, g)
}

/// `f(xy) = x·f(y)` for all `x, y`.
pub fn in_lt(f: &Mapping, g: &Groupoid) -> bool {
    g.elements()
        .all(|x| g.elements().all(|y| f.apply(g.product(x, y)) == g.product(x, f.apply(y))))
}

/// `f(xy) = f(x)·y` for all `x, y`.
pub fn in_rt(f: &Mapping, g: &Groupoid) -> bool {
    g.elements()
        .all(|x| g.elements().all(|y| f.apply(g.product(x, y)) == g.product(f.apply(x), y)))
}

/// Backtracking search for homomorphisms `G → H`, visiting them in
/// lexicographic order of their image arrays.
///
/// A partial assignment is rejected as soon as some pair of assigned
/// elements whose product is also assigned violates `f(xy) = f(x)f(y)`.
pub fn search_homomorphisms<B>(
    g: &Groupoid,
    h: &Groupoid,
    bijective: bool,
    mut visit: impl FnMut(&Mapping) -> ControlFlow<B>,
) -> Option<B> {
    if bijective && g.order() != h.order() {
        return None;
    }
    let n = g.order();
    let mut state = Search {
        g,
        h,
        bijective,
        image: vec![usize::MAX; n],
        used: vec![false; h.order()],
    };
    match state.extend(0, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

struct Search<'a> {
    g: &'a Groupoid,
    h: &'a Groupoid,
    bijective: bool,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend<B>(&mut self, x: usize, visit: &mut impl FnMut(&Mapping) -> ControlFlow<B>) -> ControlFlow<B> {
        let n = self.g.order();
        if x == n {
            let f = Mapping::new(self.image.clone());
            return visit(&f);
        }
        for v in 0..self.h.order() {
            if self.bijective && self.used[v] {
                continue;
            }
            self.image[x] = v;
            if self.consistent(x) {
                self.used[v] = true;
                self.extend(x + 1, visit)?;
                self.used[v] = false;
            }
        }
        self.image[x] = usize::MAX;
        ControlFlow::Continue(())
    }

    /// Checks every constraint that became decidable when `x` was assigned,
    /// i.e. those whose three elements all lie in `0..=x` and involve `x`.
    fn consistent(&self, x: usize) -> bool {
        let (g, h, f) = (self.g, self.h, &self.image);
        for a in 0..=x {
            for (l, r) in [(a, x), (x, a)] {
                let p = g.product(l, r);
                if p <= x && f[p] != h.product(f[l], f[r]) {
                    return false;
                }
            }
        }
        // products of earlier pairs that land on x
        for a in 0..x {
            for b in 0..x {
                if g.product(a, b) == x && f[x] != h.product(f[a], f[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// All automorphisms of `g`, in lexicographic order of image arrays.
pub fn automorphisms(g: &Groupoid) -> Vec<Mapping> {
    let mut out = Vec::new();
    search_homomorphisms::<()>(g, g, true, |f| {
        out.push(f.clone());
        ControlFlow::Continue(())
    });
    out
}

/// `AUT²(G)`.
pub fn involutive_automorphisms(g: &Groupoid) -> Vec<Mapping> {
    automorphisms(g).into_iter().filter(Mapping::is_involution).collect()
}

/// `AUT_e²(G)`: involutive automorphisms fixing every idempotent.
pub fn e_fixed_involutive_automorphisms(g: &Groupoid) -> Vec<Mapping> {
    let e = g.idempotents();
    involutive_automorphisms(g)
        .into_iter()
        .filter(|f| f.fixes_all(e.iter()))
        .collect()
}

/// All involutions on `0..n` (`BIJ²`), in lexicographic order.
pub fn involutions(n: usize) -> Vec<Mapping> {
    fn go(image: &mut Vec<usize>, out: &mut Vec<Mapping>) {
        let Some(x) = image.iter().position(|&v| v == usize::MAX) else {
            out.push(Mapping::new(image.clone()));
            return;
        };
        for y in x..image.len() {
            if image[y] != usize::MAX {
                continue;
            }
            image[x] = y;
            image[y] = x;
            go(image, out);
            image[x] = usize::MAX;
            image[y] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

/// The lexicographically first isomorphism `G → H`, if any.
pub fn find_isomorphism(g: &Groupoid, h: &Groupoid) -> Option<Mapping> {
    search_homomorphisms(g, h, true, |f| ControlFlow::Break(f.clone()))
}
