use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Dynkin type / rank / node combination that does not describe a
    /// rational homogeneous variety.
    #[error("invalid variety descriptor: {0}")]
    InvalidDescriptor(String),

    /// The stored invariant tables have no row for this input.
    #[error("data unavailable: {0}")]
    DataUnavailable(String),

    /// The classifier requires Pic(V) -> Pic(X) to be an isomorphism.
    #[error("Picard restriction is not known to be an isomorphism: {0}")]
    PicardRestriction(String),

    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Generator/relation ranks do not add up (a != e + f).
    #[error("rank mismatch: a = {a} but e + f = {e} + {f}")]
    RankMismatch { a: u32, e: u32, f: u32 },

    /// A certified interval comparison could not be decided.
    #[error("inconclusive interval comparison: {0}")]
    Inconclusive(String),

    /// Malformed numeric input (zero degree, overflow range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Cache file problems. The cache is advisory; callers recompute.
    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
