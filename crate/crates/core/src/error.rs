use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a world universe must contain at least one world")]
    EmptyUniverse,
    #[error("duplicate world `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("operands are defined over different world universes")]
    UniverseMismatch,
    #[error("choice sets are only defined for non-empty subsets")]
    EmptySubset,
    #[error("relation is not modular: {x} < {y}, but neither {x} < {z} nor {z} < {y}")]
    NotModular { x: String, y: String, z: String },
    #[error("relation is not transitive: {x} < {y} and {y} < {z}, but not {x} < {z}")]
    NotTransitive { x: String, y: String, z: String },
    #[error("layers do not partition the universe: {0}")]
    InvalidPartition(String),
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("the condition has no models")]
    VacuousCondition,
    #[error("duplicate source id `{0}`")]
    DuplicateSource(String),
    #[error("unknown source `{0}`")]
    UnknownSource(String),
    #[error("duplicate agent id `{0}`")]
    DuplicateAgent(String),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("invalid pedigreed belief state: {0}")]
    InvalidPedigree(String),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("a simulation needs at least one agent")]
    NoAgents,
    #[error("max_rounds must be positive")]
    ZeroRounds,
    #[error("probability `{0}` is outside [0, 1]")]
    InvalidProbability(String),
}
