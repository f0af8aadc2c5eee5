use thiserror::Error;

use crate::bits::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0},{1}) is not increasing")]
    NotIncreasing(Vertex, Vertex),
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph is not a directed tree")]
    NotATree,
    #[error("tree is starred (witness {0} <= {1})")]
    Starred(Vertex, Vertex),
    #[error("vertices {0} and {1} are incomparable")]
    Incomparable(Vertex, Vertex),
    #[error("invalid hyperedge {0:?}: {1}")]
    InvalidHyperedge(Vec<Vertex>, &'static str),
    #[error("{0:?} is not the vertex set of a directed path")]
    NotAPath(Vec<Vertex>),
    #[error("invalid ornamentation: {0}")]
    InvalidOrnamentation(String),
    #[error("invalid sourcing: {0}")]
    InvalidSourcing(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(&'static str),
    #[error("{0} must be acyclic")]
    AcyclicityRequired(&'static str),
    #[error("relation is not {axiom}: witness {witness:?}")]
    RelationViolation { axiom: &'static str, witness: Vec<usize> },
    #[error("not a lattice: elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("element {0} does not have a unique {1} cover")]
    NonUniqueCover(usize, &'static str),
    #[error("lattice is not {0} semidistributive")]
    NotSemidistributive(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("size guard: {what} would exceed {bound}")]
    SizeLimit { what: &'static str, bound: u64 },
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<i64>),
    #[error("edge direction orthogonal to omega between points {0} and {1}")]
    ZeroDirection(usize, usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
