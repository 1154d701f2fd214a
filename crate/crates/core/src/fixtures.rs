//! Small groupoids and maps used as golden fixtures throughout the crate.

use crate::groupoid::Groupoid;
use crate::morphisms::Mapping;

/// `{a, b, c}` with `xy = y` for `y ∈ {a, b}`, `ac = bc = b` and `cc = c`
/// (a = 0, b = 1, c = 2). A band whose only involutive automorphism is the
/// identity, although the swap `a ↔ b` satisfies the twisted triple law.
pub fn three_element_band() -> Groupoid {
    Groupoid::from_table_unchecked(3, vec![0, 1, 1, 0, 1, 1, 0, 1, 2])
}

/// The swap `a ↔ b` fixing `c`.
pub fn three_element_band_alpha() -> Mapping {
    Mapping::new(vec![1, 0, 2])
}

/// `{a, b}` with `ax = b` and `bx = a` for every `x`.
pub fn two_element_swap() -> Groupoid {
    Groupoid::from_table_unchecked(2, vec![1, 1, 0, 0])
}

pub fn two_element_swap_alpha() -> Mapping {
    Mapping::new(vec![1, 0])
}

/// `Z3` twisted by negation: `xy = y - x (mod 3)`.
pub fn z3_twist() -> Groupoid {
    Groupoid::from_table_unchecked(3, vec![0, 1, 2, 2, 0, 1, 1, 2, 0])
}

pub fn negation(order: usize) -> Mapping {
    Mapping::new((0..order).map(|x| (order - x) % order).collect())
}

/// Two-element meet semilattice `0 < 1`.
pub fn two_chain() -> Groupoid {
    Groupoid::from_table_unchecked(2, vec![0, 0, 0, 1])
}

pub fn left_zero(order: usize) -> Groupoid {
    Groupoid::from_table_unchecked(order, (0..order * order).map(|i| i / order).collect())
}

pub fn right_zero(order: usize) -> Groupoid {
    Groupoid::from_table_unchecked(order, (0..order * order).map(|i| i % order).collect())
}

/// `Z2 × Z2` with elements numbered by their bit patterns, product = xor.
pub fn klein_four() -> Groupoid {
    Groupoid::from_table_unchecked(4, (0..16).map(|i| (i / 4) ^ (i % 4)).collect())
}

/// The automorphism of [`klein_four`] exchanging the generators `1` and `2`.
pub fn klein_generator_swap() -> Mapping {
    Mapping::new(vec![0, 2, 1, 3])
}

/// The symmetric group on three letters, element 0 the identity.
pub fn symmetric3() -> Groupoid {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    Groupoid::from_fn(6, |x, y| {
        let (p, q) = (perms[x], perms[y]);
        // apply q first, then p
        index([p[q[0]], p[q[1]], p[q[2]]])
    })
    .expect("S3 table is well formed")
}
