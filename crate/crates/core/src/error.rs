use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("({u}, {v}) is not an edge")]
    InvalidEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph with {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("{0}")]
    Unsupported(&'static str),
}
