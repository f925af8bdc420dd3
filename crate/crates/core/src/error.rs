use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph or facet input.
    #[error("input error: {0}")]
    Input(String),

    /// The graph is not closed (not a proper interval graph).
    #[error("graph is not closed: {0}")]
    NotClosed(String),

    /// The identity labeling is not a closed labeling.
    #[error("labeling is not closed: edge {{{u},{w}}} spans vertex {v}, which is not adjacent to both ends")]
    NotClosedLabeling { u: usize, v: usize, w: usize },

    /// A documented precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A hard resource cap was exceeded.
    #[error("resource cap exceeded: {what} = {actual} exceeds limit {limit}")]
    Resource {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
