//! Crate-wide error type.

use std::fmt;

/// Errors produced by graph construction, codecs, analyses and the audit harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An edge joins a vertex to itself.
    LoopEdge { vertex: usize },
    /// An edge references a vertex id outside `0..vertex_count`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// The same edge appears twice in strict construction mode.
    DuplicateEdge { u: usize, v: usize },
    /// A graph6 line has a missing or invalid size header.
    MalformedHeader { reason: String },
    /// A graph6 line ends before all adjacency bits are present.
    TruncatedBits { expected_bytes: usize, got_bytes: usize },
    /// A graph6 line carries bytes past the adjacency bits.
    TrailingGarbage { extra_bytes: usize },
    /// An edge-list text payload could not be parsed.
    EdgeListSyntax { line: usize, reason: String },
    /// A generator parameter falls outside its documented range.
    ParameterOutOfRange { what: String },
    /// A product would exceed the configured vertex budget.
    ProductTooLarge { vertices: usize, budget: usize },
    /// Exact isomorphism machinery only supports small vertex counts.
    TooLargeForExactIso { vertices: usize, limit: usize },
    /// The analysis is defined on connected graphs only.
    DisconnectedGraph,
    /// A verification check was asked to exceed its instance budget.
    BudgetExceeded { what: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for {vertex_count} vertices")
            }
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::MalformedHeader { reason } => write!(f, "malformed graph6 header: {reason}"),
            Error::TruncatedBits { expected_bytes, got_bytes } => write!(
                f,
                "truncated graph6 payload: expected {expected_bytes} data bytes, got {got_bytes}"
            ),
            Error::TrailingGarbage { extra_bytes } => {
                write!(f, "{extra_bytes} unexpected trailing bytes after graph6 payload")
            }
            Error::EdgeListSyntax { line, reason } => {
                write!(f, "edge list syntax error on line {line}: {reason}")
            }
            Error::ParameterOutOfRange { what } => write!(f, "parameter out of range: {what}"),
            Error::ProductTooLarge { vertices, budget } => {
                write!(f, "product has {vertices} vertices, exceeding the budget of {budget}")
            }
            Error::TooLargeForExactIso { vertices, limit } => {
                write!(f, "exact isomorphism supports at most {limit} vertices, got {vertices}")
            }
            Error::DisconnectedGraph => write!(f, "graph is not connected"),
            Error::BudgetExceeded { what } => write!(f, "budget exceeded: {what}"),
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
