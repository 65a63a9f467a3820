use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DmgError {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("vertex labels must be non-empty")]
    EmptyLabel,

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("edge {0} is not present in the graph")]
    MissingEdge(String),

    #[error("vertex index {index} out of range for a graph with {order} vertices")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("graphs are defined over different vertex sets")]
    VertexSetMismatch,

    #[error("operation requires a directed graph, but the input has bidirected edges")]
    NotDirected,

    #[error("vertex sets must be pairwise disjoint ({0})")]
    NotDisjoint(&'static str),

    #[error("{0} must be nonempty")]
    EmptySet(&'static str),

    #[error("the input graph is not maximal in its Markov equivalence class")]
    NotMaximal,

    #[error("{what}: size {required} exceeds the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        required: usize,
    },

    #[error("horizon must be at least {min}, got {given}")]
    HorizonTooSmall { min: usize, given: usize },

    #[error("invalid edge notation `{0}`")]
    EdgeSyntax(String),
}

pub type Result<T, E = DmgError> = std::result::Result<T, E>;
