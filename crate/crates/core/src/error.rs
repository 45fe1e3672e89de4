//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` has dangling endpoint `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("rose graph needs at least 2 loops, got {0}")]
    RoseTooSmall(u32),
    #[error("line graph needs at least 1 vertex, got {0}")]
    LineTooSmall(u32),
    #[error("graph family parameter out of range: {0}")]
    BadParameter(String),
    #[error("{0} - 1 does not divide {1} - 1")]
    Indivisible(u32, u32),
    #[error("(q-1) = {} does not divide (p-1)k = {}", .q - 1, (.p - 1) * .k)]
    CongruenceUnsatisfied { p: u32, q: u32, k: u32 },
    #[error("edges `{0}` and `{1}` do not concatenate: target/source mismatch")]
    PathBreak(String, String),
    #[error("cannot concatenate: path ends at `{0}` but next path starts at `{1}`")]
    ConcatMismatch(String, String),
    #[error("empty edge sequence needs a base vertex")]
    EmptyPath,
    #[error("monomial endpoints differ: alpha ends at `{0}`, beta ends at `{1}`")]
    TermEndpointMismatch(String, String),
    #[error("elements live over different graphs")]
    GraphMismatch,
    #[error("morphism does not cover {0}")]
    IncompleteMorphism(String),
    #[error("morphism composition mismatch: middle graphs differ")]
    CompositionMismatch,
    #[error("not a graph homomorphism: {0}")]
    NotAGraphHom(String),
    #[error("not a path homomorphism: {0}")]
    NotAPathHom(String),
    #[error("morphism rejected: {0}")]
    Inadmissible(String),
    #[error("matrix size mismatch: {0} vs {1}")]
    MatrixSizeMismatch(usize, usize),
    #[error("matrix index ({0}, {1}) out of range for size {2}")]
    MatrixIndexOutOfRange(usize, usize, usize),
    #[error("invalid JSON input: {0}")]
    BadInput(String),
}
