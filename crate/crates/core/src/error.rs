use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("edge {index} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    BadIndex {
        index: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("the tilde degree is zero, so lambda is undefined")]
    DegenerateLambda,
    #[error("weight view {0} needs a root vertex")]
    MissingRoot(&'static str),
    #[error("interpolation parameter {0} is outside [0, 1]")]
    BadInterpolation(f64),
    #[error("edge {0} has weight -1, which has no dual")]
    SingularDual(usize),
    #[error("vertex subset is empty")]
    EmptySet,
    #[error("{what} is {actual}, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("graph is not simple")]
    NotSimple,
    #[error("edge set is not a spanning tree")]
    NotATree,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("argument {0} is outside the domain")]
    OutOfDomain(f64),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("closed form exists only for lambda in {{0, 1}}, got {0}")]
    BadLambda(f64),
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("no polymer with at least two vertices has nonzero weight")]
    DegenerateWeights,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
