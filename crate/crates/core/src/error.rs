use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("declared {declared} edges but found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("cut must be a proper non-empty subset of the vertices")]
    TrivialCut,
    #[error("invalid graph6 input: {0}")]
    Graph6(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilizerError {
    #[error("operator lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("vertex set {0} is not independent")]
    NotIndependent(String),
    #[error("invalid Pauli string {0:?}")]
    BadPauliString(String),
    #[error("invalid product state string {0:?}")]
    BadStateString(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Stabilizer(#[from] StabilizerError),
    #[error("{qubits} qubits exceeds the dense limit of {limit}")]
    TooLarge { qubits: usize, limit: usize },
    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
