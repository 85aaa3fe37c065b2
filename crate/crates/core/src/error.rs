use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rotation system is inconsistent: {0}")]
    BadRotation(String),
    #[error("embedding is not planar: {0}")]
    NonPlanarEmbedding(String),
    #[error("graph is not bipartite: odd cycle through vertex {0}")]
    NotBipartite(i64),
    #[error("not a simple cycle of the graph: {0}")]
    NotACycle(String),
    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not elementary")]
    NotElementary,
    #[error("graph is not weakly elementary")]
    NotWeaklyElementary,
    #[error("graph is not peripherally 2-colorable: {0}")]
    NotP2C(String),
    #[error("extremal matching is not unique: {0} candidates")]
    NotUnique(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("vertex set does not induce a hypercube")]
    NotAHypercube,
    #[error("face set is not resonant")]
    NotResonant,
    #[error("graph is not a tree")]
    NotATree,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("structure does not match the expected class: {0}")]
    ClassMismatch(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid hexagonal chain: {0}")]
    InvalidChainSpec(String),
    #[error("schema error at {field}: {message}")]
    Schema { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
