use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::morphisms::Mapping;

fn check_involution(g: &Groupoid, alpha: &Mapping) -> Result<()> {
    if alpha.len() != g.order() {
        return Err(Error::OrderMismatch { left: g.order(), right: alpha.len() });
    }
    if !alpha.is_involution() {
        return Err(Error::NotInvolution { order: g.order() });
    }
    Ok(())
}

fn row_permuted(g: &Groupoid, alpha: &Mapping) -> Groupoid {
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for x in g.elements() {
        table.extend_from_slice(g.row(alpha.apply(x)));
    }
    Groupoid::from_table_unchecked(n, table)
}

/// The groupoid with product `xy = (αx) * y`, where `*` is the product of `star`.
pub fn twist(star: &Groupoid, alpha: &Mapping) -> Result<Groupoid> {
    check_involution(star, alpha)?;
    Ok(row_permuted(star, alpha))
}

/// Recovers `x * y = (αx)y` from a twisted groupoid. Since `α` is an
/// involution this is the same row permutation as [`twist`].
pub fn untwist(g: &Groupoid, alpha: &Mapping) -> Result<Groupoid> {
    check_involution(g, alpha)?;
    Ok(row_permuted(g, alpha))
}
