use thiserror::Error;

/// Errors raised while constructing or combining algebraic objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    Empty,
    #[error("table is not {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("entry {value} out of range (size {size})")]
    OutOfRange { value: usize, size: usize },
    #[error("too many elements: {0} (limit {limit})", limit = crate::bitset::MAX_ELEMENTS)]
    TooLarge(usize),
    #[error("monoid too large: {0} elements (limit 255)")]
    MonoidTooLarge(usize),
    #[error("multiplication is not associative: ({s}*{t})*{u} != {s}*({t}*{u})")]
    NotAssociative { s: usize, t: usize, u: usize },
    #[error("identity law fails at element {s}")]
    IdentityLawFails { s: usize },
    #[error("identity does not act trivially on element {a}")]
    IdentityActionFails { a: usize },
    #[error("action is not compatible: (a{a}*s{s})*s{t} != a{a}*(s{s}s{t})")]
    CompatibilityFails { a: usize, s: usize, t: usize },
    #[error("set is not closed under the action")]
    NotClosed,
    #[error("subacts are nonempty")]
    EmptySubact,
    #[error("generating set is empty")]
    EmptyGenerators,
    #[error("subact must be proper")]
    NotProper,
    #[error("acts are over different monoids")]
    MixedMonoids,
    #[error("map is not equivariant: f(a{a}*s{s}) != f(a{a})*s{s}")]
    NotEquivariant { a: usize, s: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
