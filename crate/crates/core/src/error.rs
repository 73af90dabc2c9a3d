use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element identifier `{0}`")]
    DuplicateId(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("{what} has size {size}, above the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("set is not closed")]
    NotClosed,
    #[error("family is not filtered")]
    NotFiltered,
    #[error("set is not compact saturated")]
    NotCompactSaturated,
    #[error("set is not irreducible closed")]
    NotIrreducibleClosed,
    #[error("family is not irreducible in the Smyth power space")]
    NotIrreducibleFamily,
    #[error("closed set misses a member of the family")]
    MissesMember,
    #[error("map is not continuous")]
    NotContinuous,
    #[error("set is not a Rudin set")]
    NotRudinSet,
    #[error("set is not an upper set")]
    NotUpperSet,
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error("expression does not belong to the grammar of {0}")]
    WrongGrammar(String),
    #[error("set is not representable: {0}")]
    UnrepresentableSet(String),
    #[error("family is not monotone: {0}")]
    NonMonotoneFamily(String),
    #[error("open set is not open in the coarser topology: {0}")]
    NotCoarser(String),
    #[error("parse error: {0}")]
    Parse(String),
}
