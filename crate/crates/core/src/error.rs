use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=62")]
    OrderOutOfRange(usize),

    #[error("biadjacency has {rows} rows of length {cols}, expected {expected_rows}x{expected_cols}")]
    BiadjacencyShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("matching number of a non-bipartite graph is only supported up to 20 vertices (got {0})")]
    MatchingTooLarge(usize),

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("walk length {k} exceeds the budget of {max}")]
    WalkBudget { k: usize, max: usize },

    #[error("vertices {u} and {v} are not twins: vertex {witness} is adjacent to exactly one of them")]
    NotTwins { u: usize, v: usize, witness: usize },

    #[error("vertices {u} and {v} are not twins: they are adjacent")]
    TwinsAdjacent { u: usize, v: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("identification set in {graph} is not independent: {u} ~ {v}")]
    NotIndependent { graph: &'static str, u: usize, v: usize },

    #[error("identification set in {graph} repeats vertex {vertex}")]
    RepeatedVertex { graph: &'static str, vertex: usize },

    #[error("identification sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cover partition requires |X1| >= |Y1| (got {x1} < {y1})")]
    CoverImbalance { x1: usize, y1: usize },

    #[error("order {0} is outside the enumeration range 2..=9 (10 requires explicit opt-in)")]
    EnumerationRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
