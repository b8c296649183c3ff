use std::path::PathBuf;

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{edges} edges do not fit in a simple graph on {vertices} vertices")]
    TooManyEdges { vertices: usize, edges: usize },
    #[error("the rewiring chain needs at least one edge")]
    NoEdges,
    #[error("checkpoints must be ascending and within 0..={steps}: {detail}")]
    BadCheckpoints { steps: u64, detail: String },
    #[error("growth with {per_vertex} edges per vertex needs more than {per_vertex} vertices, got {vertices}")]
    InfeasibleGrowth { vertices: usize, per_vertex: usize },
    #[error("degree sequence sums to {0}, which is odd")]
    OddDegreeSum(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("power-law fit needs at least 3 distinct positive degrees, got {0}")]
    TooFewPoints(usize),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("input contains no data lines")]
    Empty,
}

impl ParseError {
    pub(crate) fn line(line: usize, message: impl Into<String>) -> Self {
        ParseError::Line {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown site label `{0}`")]
    UnknownSite(String),
    #[error("{0} must be at least 1")]
    ZeroCount(&'static str),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}
