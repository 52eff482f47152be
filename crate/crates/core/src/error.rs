use thiserror::Error;

/// Errors raised while building, decoding or generating graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("graph6: {0}")]
    Graph6(Graph6Error),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("no connected instance found within {0} attempts")]
    RejectionBudget(u32),
    #[error("vertices {from} and {to} are not connected")]
    Unreachable { from: usize, to: usize },
    #[error("exhaustive search limited to {max} vertices, got {n}")]
    SearchLimit { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("size header denotes more than 62 vertices")]
    UnsupportedSize,
    #[error("expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    Padding,
}

impl From<Graph6Error> for GraphError {
    fn from(e: Graph6Error) -> Self {
        GraphError::Graph6(e)
    }
}

/// Errors raised by the game solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("cop count must be at least 1")]
    NoCops,
    #[error("the game is only defined on connected graphs")]
    Disconnected,
    #[error("transition budget of {budget} exceeded after {states} states")]
    Budget { budget: u64, states: u64 },
    #[error("state space of {states} states exceeds the limit of {limit}")]
    TooLarge { states: u64, limit: u64 },
    #[error("malformed state: {0}")]
    Malformed(&'static str),
    #[error("illegal move at round {round}: {reason}")]
    IllegalMove { round: usize, reason: &'static str },
    #[error("guarded vertices do not form an isometric path")]
    NotIsometric,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
