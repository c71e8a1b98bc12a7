use thiserror::Error;

/// Errors raised by graph construction, dynamics and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex index {index} out of range for a graph with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("state has {found} values but the graph has {expected} vertices")]
    StateArity { expected: usize, found: usize },

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("line {line}: edge {source_name} -> {target} already declared with the opposite sign")]
    PartitionViolation {
        line: usize,
        source_name: String,
        target: String,
    },

    #[error("conflicting clamps on vertex `{0}`")]
    ConflictingClamp(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("state space of {size} states exceeds the limit of {limit}")]
    StateSpaceTooLarge { size: u128, limit: u64 },

    #[error("no recurrence found within {0} steps")]
    BudgetExceeded(u64),

    #[error("{0}; use the brute-force oracle for clamped graphs")]
    Unsupported(String),

    #[error("invalid Boolean code (1,1) on vertex `{0}`")]
    InvalidCode(String),

    #[error("invalid phenotype: {0}")]
    InvalidPhenotype(String),
}

pub type Result<T, E = SrgError> = std::result::Result<T, E>;
