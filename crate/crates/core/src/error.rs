use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("transport puts weight on non-edge ({0}, {1})")]
    NonEdgeTransport(usize, usize),
    #[error("transport weight on ({0}, {1}) is negative or not finite")]
    BadWeight(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("no simple {d}-regular graph on {n} vertices")]
    Infeasible { n: usize, d: usize },
    #[error("random regular construction gave up after {0} attempts")]
    RejectionBudget(usize),
    #[error("list at vertex {vertex} has {list_len} colors but degree {degree}")]
    ListTooShort { vertex: usize, list_len: usize, degree: usize },
    #[error("peeling stuck: every remaining vertex exceeds degree {threshold}")]
    PeelingStuck { threshold: usize, residual: Vec<usize> },
    #[error("subsets overlap at vertex {0}")]
    Overlap(usize),
    #[error("partition does not cover vertex {0}")]
    Uncovered(usize),
    #[error("edge ({0}, {1}) joins the two sets")]
    EdgeBetween(usize, usize),
    #[error("{what}: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("alpha = {0} is too close to a rational with small denominator")]
    NearRational(f64),
    #[error("first-hit search exceeded {0} steps")]
    HitBudget(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "empty_graph",
            Error::EmptySubset => "empty_subset",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::Asymmetric(..) => "asymmetric_adjacency",
            Error::NonEdgeTransport(..) => "non_edge_transport",
            Error::BadWeight(..) => "bad_weight",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::NotRegular => "not_regular",
            Error::Disconnected => "disconnected",
            Error::Edgeless => "edgeless",
            Error::Infeasible { .. } => "infeasible",
            Error::RejectionBudget(_) => "rejection_budget",
            Error::ListTooShort { .. } => "list_too_short",
            Error::PeelingStuck { .. } => "peeling_stuck",
            Error::Overlap(_) => "overlap",
            Error::Uncovered(_) => "uncovered",
            Error::EdgeBetween(..) => "edge_between",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::NearRational(_) => "near_rational",
            Error::HitBudget(_) => "hit_budget",
            Error::Parse { .. } => "parse",
        }
    }
}
