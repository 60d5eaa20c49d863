use thiserror::Error;

/// Errors raised by the group, graph and census machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("a group needs at least one generator (use the identity for the trivial group)")]
    NoGenerators,

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup is not contained in the group")]
    NotASubgroup,

    #[error("group order overflows u128")]
    OrderOverflow,

    #[error("{what} bound exceeded: {size} > {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("search exhausted after {tried} candidates: {what}")]
    NotFound { what: String, tried: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coset enumeration exceeded {0} cosets")]
    CosetBoundExceeded(usize),

    #[error("not an automorphism group of the graph")]
    NotAutomorphisms,

    #[error("graph is not arc-transitive under the given group")]
    NotArcTransitive,

    #[error("unknown graph name: {0}")]
    UnknownGraph(String),

    #[error("{0} is a stretch construction and is not enabled")]
    StretchDisabled(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error in one of the text or JSON input formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
