//! Finite groupoids determined by involutive automorphisms on semilattices
//! of groups.
//!
//! A groupoid `S` is *determined* by a groupoid `{S, *}` and an involutive
//! automorphism `α` of `{S, *}` when `xy = (αx) * y`. This crate decides,
//! for a finite Cayley table, whether it is determined by a semilattice of
//! groups and an idempotent-fixed `α`; builds every such groupoid from
//! Clifford-style data; and sweeps small tables exhaustively to confirm the
//! structural theorems relating the two descriptions.
//!
//! ```
//! use groupoid_twist::{decide, fixtures};
//!
//! let report = decide(&fixtures::z3_twist());
//! assert!(report.determined);
//! ```

pub mod cli;
pub mod clifford;
pub mod determination;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod groupoid;
pub mod inverse;
pub mod morphisms;
pub mod report;
mod text;
pub mod variety;

pub use determination::{decide, twist, untwist, DecisionReport};
pub use error::{Error, Result};
pub use groupoid::{Element, ElementSet, Groupoid};
pub use morphisms::Mapping;
pub use variety::VarietyId;
