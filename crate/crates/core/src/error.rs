use crate::graph::Partition;
use crate::setfn::Properties;
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{what} is {size}, above the configured limit {limit}")]
    LimitExceeded { what: &'static str, size: u64, limit: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("invalid set function: {0}")]
    InvalidSetFunction(String),

    #[error("set function is not declared {0:?}")]
    MissingFlags(Properties),

    #[error("set function is not {property:?}: counterexample A={a}, B={b}")]
    PropertyViolated { property: Properties, a: VertexSet, b: VertexSet },

    #[error("host is not partition-connected; violating partition {witness:?}")]
    NotPartitionConnected { witness: Partition },

    #[error("edge subset is not sparse")]
    NotSparse,

    #[error("condition violated at S={witness}")]
    ConditionViolated { witness: VertexSet },

    #[error("hypothesis violated ({clause}) at {witness}")]
    HypothesisViolated { clause: String, witness: VertexSet },

    #[error("required vertices are not joined by any partition-connected subgraph")]
    Disconnected,

    #[error("no spanning subgraph meets the degree targets")]
    Infeasible,

    #[error("no structure witness exists for the given subgraph")]
    NoWitness,

    #[error("digraph is not arc-connected; deficient set {witness}")]
    NotArcConnected { witness: VertexSet },

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
