use thiserror::Error;

use crate::groupoid::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input did not follow one of the `.gpd`, `.map` or `.cspec` formats.
    #[error("line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("the set of products is not closed under the operation")]
    NotClosed,

    #[error("mapping is not an involution on {order} elements")]
    NotInvolution { order: usize },

    #[error("element {element} has {count} inverses (exactly one required)")]
    NotInverse { element: Element, count: usize },

    #[error("operands have mismatched orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid construction data: {0}")]
    InvalidSpec(String),

    #[error("groupoid is not determined by a semilattice of groups: {0}")]
    NotDetermined(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("order {order} exceeds the exhaustive limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("enumeration limits too large: {0}")]
    LimitsTooLarge(String),
}

impl Error {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::MalformedInput {
            line,
            message: message.into(),
        }
    }
}
