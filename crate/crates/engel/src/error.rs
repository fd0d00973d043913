//! Error types shared across the crate.

use thiserror::Error;

/// Errors from building or validating a polycyclic presentation.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error("normal word has non-ascending generator indices")]
    NonAscendingWord,
    #[error("tail for generator {gen} mentions index {found}, expected indices >= {min}")]
    TailIndexViolation {
        gen: usize,
        found: usize,
        min: usize,
    },
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("exponent out of range for generator of finite relative order")]
    ExponentRange,
    #[error("relative order must be at least 2")]
    BadRelativeOrder,
    #[error("cannot derive inverse conjugation tails: {0}")]
    InverseDerivation(String),
    #[error("randomized consistency check failed: {0}")]
    ConsistencyCheck(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error(transparent)]
    Pc(#[from] PcError),
}

/// Errors from group-element computations over a pc presentation.
#[derive(Debug, Error)]
pub enum PcError {
    #[error("generator index {index} out of range (ngens = {ngens})")]
    IndexOutOfRange { index: usize, ngens: usize },
    #[error("collection budget of {0} rewrite steps exceeded")]
    BudgetExceeded(u64),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("operation requires a finite group")]
    InfiniteGroup,
    #[error("element order undecided within iteration budget")]
    OrderUndecided,
    #[error("memory budget of {0} items exceeded")]
    MemoryExceeded(usize),
    #[error("commutator of an empty element list")]
    EmptyCommutator,
    #[error("internal: missing inverse conjugation relation ({i},{k})")]
    MissingInverseRelation { i: usize, k: usize },
}

/// Errors from free-word construction and parsing.
#[derive(Debug, Error)]
pub enum WordError {
    #[error("generator index {index} out of range (alphabet = {alphabet})")]
    IndexOutOfRange { index: usize, alphabet: usize },
    #[error("cannot parse word atom `{0}`")]
    BadAtom(String),
}

/// Errors from homomorphism construction and use.
#[derive(Debug, Error)]
pub enum HomError {
    #[error("expected {expected} generator images, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("image of defining relation is not the identity (relation #{0})")]
    RelationViolated(usize),
    #[error("source presentation lacks definitions to extend images")]
    NoExtension,
    #[error("element does not belong to the homomorphism's source group")]
    SourceMismatch,
    #[error("homomorphism endpoints do not match this operation")]
    EndpointMismatch,
    #[error("invertibility is undecidable here: {0}")]
    InvertibilityUndecided(String),
    #[error(transparent)]
    Pc(#[from] PcError),
}
