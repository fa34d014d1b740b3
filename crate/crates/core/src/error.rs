use thiserror::Error;

/// Errors raised by graph construction, linear algebra and sandpile dynamics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex `{0}`")]
    LoopEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("non-positive multiplicity on edge `{0}`-`{1}`")]
    NonPositiveMultiplicity(String, String),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("contraction set is empty")]
    EmptyContractionSet,
    #[error("vertex `{0}` is not a global sink")]
    NoGlobalSink(String),
    #[error("reduced Laplacian is singular")]
    SingularReducedLaplacian,
    #[error("cokernel is infinite (free rank {0})")]
    InfiniteCokernel(usize),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("configuration has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("configuration has a negative entry at position {0}")]
    NegativeEntry(usize),
    #[error("configuration is not stable at position {0}")]
    Unstable(usize),
    #[error("configuration is not recurrent")]
    NotRecurrent,
    #[error("configurations belong to different graphs")]
    GraphMismatch,
    #[error("recurrent orbit exceeds the guard of {0} configurations")]
    OrbitTooLarge(usize),
    #[error("graph is not biregular bipartite: {0}")]
    NotBiregular(String),
    #[error("map is not surjective: vertex `{0}` has an empty fiber")]
    NotSurjective(String),
    #[error("homomorphism clause violated: {0}")]
    ClauseViolation(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read `{0}`: {1}")]
    Io(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
