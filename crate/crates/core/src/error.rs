use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {size} elements; at most 64 are supported")]
    TooManyElements { size: usize },

    #[error("duplicate element label {label:?}")]
    DuplicateLabel { label: String },

    #[error("unknown element label {label:?}")]
    UnknownLabel { label: String },

    #[error("element index {index} out of range for a ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error(
        "{what} would enumerate 2^{n} subsets, above the cap of 2^{cap}; \
         use the membership predicates instead, or raise the cap"
    )]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("I(F) is undefined: the family has no nonempty member")]
    UndefinedIntersection,

    #[error("family is not a generalized topology: the empty set is missing")]
    MissingEmptySet,

    #[error("family is not a generalized topology: the union of {a} and {b} is not a member")]
    NotUnionClosed { a: String, b: String },

    #[error("relation is not reflexive at element {element}")]
    NotReflexive { element: usize },

    #[error("relation is not transitive: {x} <= {y} and {y} <= {z} but not {x} <= {z}")]
    NotTransitive { x: usize, y: usize, z: usize },

    #[error("row {row} has bits set beyond the carrier size {size}")]
    StrayBits { row: usize, size: usize },

    #[error("unknown statement id {name:?}")]
    UnknownStatement { name: String },

    #[error("statement {statement} expects a {expected} instance")]
    KindMismatch {
        statement: String,
        expected: &'static str,
    },

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
