//! The twelve semigroup classes built from bands, left/right-zero
//! semigroups and rectangular bands, with their inflations (`I·`) and
//! generalized inflations (`G·`).
//!
//! Each class is a semigroup variety: membership means the table is
//! associative *and* satisfies the defining identity. Multi-letter words are
//! evaluated left-associated (`xyz` is `(xy)z`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarietyId {
    B,
    L0,
    R0,
    RB,
    IB,
    IL0,
    IR0,
    IRB,
    GB,
    GL0,
    GR0,
    GRB,
}

impl VarietyId {
    pub const ALL: [VarietyId; 12] = [
        VarietyId::B,
        VarietyId::L0,
        VarietyId::R0,
        VarietyId::RB,
        VarietyId::IB,
        VarietyId::IL0,
        VarietyId::IR0,
        VarietyId::IRB,
        VarietyId::GB,
        VarietyId::GL0,
        VarietyId::GR0,
        VarietyId::GRB,
    ];

    /// The four base classes `X` for which `IX` and `GX` are defined.
    pub const BASE: [VarietyId; 4] = [VarietyId::B, VarietyId::L0, VarietyId::R0, VarietyId::RB];

    pub fn name(self) -> &'static str {
        match self {
            VarietyId::B => "B",
            VarietyId::L0 => "L0",
            VarietyId::R0 => "R0",
            VarietyId::RB => "RB",
            VarietyId::IB => "IB",
            VarietyId::IL0 => "IL0",
            VarietyId::IR0 => "IR0",
            VarietyId::IRB => "IRB",
            VarietyId::GB => "GB",
            VarietyId::GL0 => "GL0",
            VarietyId::GR0 => "GR0",
            VarietyId::GRB => "GRB",
        }
    }

    /// The defining identity, as printed in reports.
    pub fn identity_text(self) -> &'static str {
        match self {
            VarietyId::B => "x = xx",
            VarietyId::L0 => "xyz = x",
            VarietyId::R0 => "xyz = z",
            VarietyId::RB => "xyx = x",
            VarietyId::IB => "xy = (xx)(yy)",
            VarietyId::IL0 => "xyz = xw",
            VarietyId::IR0 => "xyz = wz",
            VarietyId::IRB => "xyz = xz",
            VarietyId::GB => "xy = xyxy",
            VarietyId::GL0 => "xyz = xy",
            VarietyId::GR0 => "xyz = yz",
            VarietyId::GRB => "xy = xyzxy",
        }
    }

    /// For `IX` and `GX`, the base class `X`.
    pub fn base(self) -> VarietyId {
        use VarietyId::*;
        match self {
            B | IB | GB => B,
            L0 | IL0 | GL0 => L0,
            R0 | IR0 | GR0 => R0,
            RB | IRB | GRB => RB,
        }
    }

    pub fn inflation(self) -> VarietyId {
        use VarietyId::*;
        match self.base() {
            B => IB,
            L0 => IL0,
            R0 => IR0,
            _ => IRB,
        }
    }

    pub fn generalized_inflation(self) -> VarietyId {
        use VarietyId::*;
        match self.base() {
            B => GB,
            L0 => GL0,
            R0 => GR0,
            _ => GRB,
        }
    }

    /// A witnessing assignment `(x, y, z, w)` violating the identity, if any.
    /// Unused variables are reported as 0.
    pub fn identity_counterexample(self, g: &Groupoid) -> Option<[usize; 4]> {
        use VarietyId::*;
        let n = g.order();
        let p = |a, b| g.product(a, b);
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));
        let quads = || triples().flat_map(move |(x, y, z)| (0..n).map(move |w| (x, y, z, w)));
        match self {
            B => (0..n).find(|&x| p(x, x) != x).map(|x| [x, 0, 0, 0]),
            L0 => triples().find(|&(x, y, z)| p(p(x, y), z) != x).map(|(x, y, z)| [x, y, z, 0]),
            R0 => triples().find(|&(x, y, z)| p(p(x, y), z) != z).map(|(x, y, z)| [x, y, z, 0]),
            RB => pairs().find(|&(x, y)| p(p(x, y), x) != x).map(|(x, y)| [x, y, 0, 0]),
            IB => pairs()
                .find(|&(x, y)| p(x, y) != p(p(x, x), p(y, y)))
                .map(|(x, y)| [x, y, 0, 0]),
            IL0 => quads()
                .find(|&(x, y, z, w)| p(p(x, y), z) != p(x, w))
                .map(|(x, y, z, w)| [x, y, z, w]),
            IR0 => quads()
                .find(|&(x, y, z, w)| p(p(x, y), z) != p(w, z))
                .map(|(x, y, z, w)| [x, y, z, w]),
            IRB => triples()
                .find(|&(x, y, z)| p(p(x, y), z) != p(x, z))
                .map(|(x, y, z)| [x, y, z, 0]),
            GB => pairs()
                .find(|&(x, y)| p(x, y) != g.eval_left(&[x, y, x, y]))
                .map(|(x, y)| [x, y, 0, 0]),
            GL0 => triples()
                .find(|&(x, y, z)| p(p(x, y), z) != p(x, y))
                .map(|(x, y, z)| [x, y, z, 0]),
            GR0 => triples()
                .find(|&(x, y, z)| p(p(x, y), z) != p(y, z))
                .map(|(x, y, z)| [x, y, z, 0]),
            GRB => triples()
                .find(|&(x, y, z)| p(x, y) != g.eval_left(&[x, y, z, x, y]))
                .map(|(x, y, z)| [x, y, z, 0]),
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VarietyId::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::malformed(1, format!("unknown class {s:?}")))
    }
}

/// Whether `g` satisfies the defining identity of `class`, with no
/// associativity requirement.
pub fn satisfies_identity(g: &Groupoid, class: VarietyId) -> bool {
    class.identity_counterexample(g).is_none()
}

/// Whether `g` is a semigroup in `class`.
pub fn satisfies_variety(g: &Groupoid, class: VarietyId) -> bool {
    g.is_associative() && satisfies_identity(g, class)
}

/// The square-based characterization of a generalized inflation: `g` is a
/// semigroup whose square `S²` lies in the base class.
pub fn square_in_base(g: &Groupoid, class: VarietyId) -> Result<bool> {
    let sq = g.square_subgroupoid()?;
    Ok(g.is_associative() && satisfies_variety(&sq.groupoid, class.base()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn left_zero_is_in_l0() {
        assert!(satisfies_variety(&fixtures::left_zero(2), VarietyId::L0));
        assert!(!satisfies_variety(&fixtures::left_zero(2), VarietyId::R0));
        assert!(satisfies_variety(&fixtures::right_zero(2), VarietyId::R0));
    }

    #[test]
    fn band_membership() {
        assert!(satisfies_variety(&fixtures::three_element_band(), VarietyId::B));
        assert!(!satisfies_variety(&fixtures::two_element_swap(), VarietyId::B));
        assert_eq!(
            VarietyId::B.identity_counterexample(&fixtures::two_element_swap()),
            Some([0, 0, 0, 0])
        );
    }

    #[test]
    fn identity_without_associativity() {
        // idempotent but not associative: x·y = 2x + 2y mod 3 (quasigroup of order 3)
        let g = Groupoid::from_fn(3, |x, y| (2 * x + 2 * y) % 3).unwrap();
        assert!(satisfies_identity(&g, VarietyId::B));
        assert!(!g.is_associative());
        assert!(!satisfies_variety(&g, VarietyId::B));
    }

    #[test]
    fn names_round_trip() {
        for v in VarietyId::ALL {
            assert_eq!(v.name().parse::<VarietyId>().unwrap(), v);
            assert_eq!(v.inflation().base(), v.base());
            assert_eq!(v.generalized_inflation().base(), v.base());
        }
        assert!("XY".parse::<VarietyId>().is_err());
    }

    #[test]
    fn rectangular_band_of_order_four() {
        // I × J with |I| = |J| = 2, (i, j)(k, l) = (i, l); element = 2i + j
        let g = Groupoid::from_fn(4, |x, y| (x & 2) | (y & 1)).unwrap();
        assert!(satisfies_variety(&g, VarietyId::RB));
        assert!(satisfies_variety(&g, VarietyId::B));
        assert!(satisfies_variety(&g, VarietyId::IRB));
        assert!(!satisfies_variety(&g, VarietyId::L0));
    }
}
