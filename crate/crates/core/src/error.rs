use std::sync::OnceLock;

use thiserror::Error;

use crate::uniqueness::InfeasibleReason;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {n} vertices, above the limit of {limit}")]
    VertexLimit { n: usize, limit: usize },
    #[error("set-cover ground set has {size} elements, above the limit of {limit}")]
    GroundLimit { size: usize, limit: usize },
    #[error("more than {limit} minimum vertex covers")]
    CoverCountLimit { limit: usize },
    #[error("formula has {vars} variables, above the limit of {limit}")]
    VariableLimit { vars: usize, limit: usize },
    #[error("time limit exceeded after {nodes} search nodes")]
    TimeLimit { nodes: u64 },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the given parts are not a bipartition of the graph")]
    InvalidBipartition,
    #[error("graph is not a tree")]
    NotATree,
    #[error("pre-assignment is infeasible: {0}")]
    Infeasible(InfeasibleReason),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for errors that come from a configured resource cap.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::VertexLimit { .. }
                | Error::GroundLimit { .. }
                | Error::CoverCountLimit { .. }
                | Error::VariableLimit { .. }
                | Error::TimeLimit { .. }
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing problem line")]
    MissingProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: endpoint {vertex} out of range 1..={n}")]
    EndpointOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("problem line declares {declared} edges, found {found} distinct")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: clause has {len} literals, expected 3")]
    ClauseWidth { line: usize, len: usize },
    #[error("problem line declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("line {line}: literal {literal} out of range for {vars} variables")]
    LiteralOutOfRange { line: usize, literal: i64, vars: usize },
}

/// Resource caps for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph any exponential solver accepts.
    pub vertex_limit: usize,
    /// Largest graph the subset-enumeration solver accepts.
    pub enum_vertex_limit: usize,
    /// Largest set-cover ground set.
    pub ground_limit: usize,
    /// Largest number of minimum vertex covers enumerated.
    pub max_covers: usize,
    /// Largest variable count for brute-force 1-in-3 enumeration.
    pub var_limit: usize,
}

pub const DEFAULT_VERTEX_LIMIT: usize = 512;
pub const VERTEX_LIMIT_ENV: &str = "PAUVC_VERTEX_LIMIT";

impl Limits {
    pub const fn builtin() -> Self {
        Limits {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            enum_vertex_limit: 24,
            ground_limit: 26,
            max_covers: 1 << 20,
            var_limit: 24,
        }
    }

    /// Built-in limits with `PAUVC_VERTEX_LIMIT` applied when it parses as a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Self::builtin();
        if let Some(v) = std::env::var(VERTEX_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
        {
            limits.vertex_limit = v;
        }
        limits
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.vertex_limit {
            Err(Error::VertexLimit { n, limit: self.vertex_limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        static CACHED: OnceLock<Limits> = OnceLock::new();
        *CACHED.get_or_init(Limits::from_env)
    }
}
