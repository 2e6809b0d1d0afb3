use thiserror::Error;

/// Errors raised by graph construction, embeddings, search and the
/// coloring pipelines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { expected: usize, got: usize },
    #[error("vertex {vertex} has class {class}, allowed range is 1..={k}")]
    ClassOutOfRange { vertex: usize, class: usize, k: usize },
    #[error("invalid defect vector: {0}")]
    InvalidDefects(String),
    #[error("invalid circulant: {0}")]
    InvalidCirculant(String),
    #[error("grid G[{m}x{n},{k}] is not a simple 6-regular graph: {reason}")]
    InvalidGrid { m: usize, n: usize, k: usize, reason: String },
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation requires Euler genus 2, embedding has Euler genus {0}")]
    NotToroidal(usize),
    #[error("cycle is not valid: {0}")]
    InvalidCycle(String),
    #[error("cycle is contractible")]
    ContractibleCycle,
    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },
    #[error("not a path: {0}")]
    InvalidPath(String),
    #[error("enumeration needs {needed} assignments, bound is {bound}")]
    EnumerationBound { needed: f64, bound: f64 },
    #[error("search gave up after {0} nodes")]
    Indeterminate(u64),
    #[error("graph has no coloring for {0}")]
    Unsatisfiable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate failed verification: {0}")]
    CertificateRejected(String),
    #[error("invalid pattern request: {0}")]
    InvalidPattern(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
