use thiserror::Error;

use crate::constructors::Theorem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("prime {p} exceeds the supported bound {max}")]
    PrimeTooLarge { p: u64, max: u64 },

    #[error("invalid order {order} for {what}")]
    InvalidOrder { what: String, order: usize },

    #[error("graph order {order} exceeds the supported bound {max}")]
    OrderTooLarge { order: u128, max: usize },

    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },

    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EdgeOutOfRange { u: usize, v: usize, order: usize },

    #[error("edge ({u}, {v}) appears more than once")]
    ParallelEdge { u: usize, v: usize },

    #[error("expected {expected} vertex names, got {got}")]
    NameCount { expected: usize, got: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("labeling has {labels} entries but the graph has order {order}")]
    LabelingOrderMismatch { labels: usize, order: usize },

    #[error("graph is disconnected; Legendre cordial labelings are defined for connected graphs only")]
    Disconnected,

    #[error("{theorem}: connectivity gate failed: {condition}")]
    ConnectivityViolation { theorem: Theorem, condition: String },

    #[error("{theorem}: hypothesis violated: {condition} (lhs = {lhs}, rhs = {rhs})")]
    HypothesisViolation {
        theorem: Theorem,
        condition: String,
        lhs: i64,
        rhs: i64,
    },

    #[error("{theorem}: {what} is required but was not supplied")]
    MissingInput { theorem: Theorem, what: &'static str },

    #[error("{theorem}: predicted tally ({pe0}, {pe1}) differs from verified tally ({ve0}, {ve1})")]
    PredictionMismatch {
        theorem: Theorem,
        pe0: u64,
        pe1: u64,
        ve0: u64,
        ve1: u64,
    },

    #[error("graph order {order} exceeds the search ceiling {ceiling}")]
    SearchCeiling { order: usize, ceiling: usize },

    #[error("invalid search budget: {0}")]
    InvalidBudget(String),

    #[error("invalid family spec {spec:?}: {reason}")]
    BadFamilySpec { spec: String, reason: String },

    #[error("unknown name {0:?}")]
    UnknownName(String),
}
