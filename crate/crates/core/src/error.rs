use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for graph of order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("malformed labeling: {0}")]
    MalformedLabeling(String),
    #[error("{what} requires at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("{what} supports at most {max}, got {got}")]
    TooLarge { what: &'static str, max: usize, got: usize },
    #[error("graph of order {n} exceeds the exact-solver capacity of {cap}")]
    CapacityExceeded { n: usize, cap: usize },
    #[error("search exceeded the node budget of {limit}")]
    BudgetExceeded { limit: u64 },
    #[error("enumeration truncated after {cap} labelings")]
    CapExceeded { cap: usize },
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),
    #[error("k = {0} is outside the supported range 1..=8")]
    InvalidK(usize),
    #[error("labeling is not a k-rainbow dominating function (vertex {0} is not dominated)")]
    NotValidRdf(usize),
    #[error("vertex set is not dominating (vertex {0} is not dominated)")]
    NotDominating(usize),
    #[error("sets of the couple intersect at vertex {0}")]
    NotDisjoint(usize),
    #[error("(A, B) is not a dominating couple (vertex {0} is not covered)")]
    NotDominatingCouple(usize),
    #[error("H has {n} vertices but at least k = {k} are required")]
    HTooSmall { n: usize, k: usize },
    #[error("H has no minimum 2-rainbow dominating function of weight 3 with a {{1,2}} label")]
    NoPairWitness,
    #[error("H has no universal vertex")]
    NoUniversalVertex,
    #[error("H is disconnected")]
    DisconnectedH,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("labeling has {got} vertices but the graph has {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("internal witness check failed: {0}")]
    WitnessInvalid(String),
}
