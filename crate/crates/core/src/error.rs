use crate::set::VertexSet;
use crate::structures::ValidationReport;
use crate::transforms::Offender;
use crate::vine::EdgeLabel;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("structure has no clusters")]
    NoClusters,
    #[error("edge #{edge} ({left}, {right}) is malformed: {reason}")]
    MalformedEdge {
        edge: usize,
        left: usize,
        right: usize,
        reason: &'static str,
    },
    #[error("invalid junction tree: {0}")]
    InvalidJunctionTree(ValidationReport),
    #[error("cherry-tree order must be at least 1")]
    ZeroOrder,
    #[error("cluster {cluster} has size {found}, expected {expected}")]
    ClusterSize {
        cluster: VertexSet,
        expected: usize,
        found: usize,
    },
    #[error("separator {separator} between {left} and {right} has size {found}, expected {expected}")]
    SeparatorSize {
        left: VertexSet,
        right: VertexSet,
        separator: VertexSet,
        expected: usize,
        found: usize,
    },
    #[error("invalid base tree: {0}")]
    InvalidBaseTree(&'static str),
    #[error("invalid vine sequence: {0}")]
    InvalidVine(ValidationReport),
    #[error("{}", not_truncated(.offender))]
    NotTruncated { offender: Option<Offender> },
    #[error("no valid vine sequence found for the given cherry-tree")]
    NoValidSequence,
    #[error("a single cluster has nothing to join")]
    NothingToJoin,
    #[error("parameter {value} is outside the domain of the {family} family")]
    ParameterDomain { family: &'static str, value: f64 },
    #[error("matrix is not a correlation matrix: {0}")]
    NotCorrelation(&'static str),
    #[error("singular matrix (pivot {pivot:e})")]
    Singular { pivot: f64 },
    #[error("coordinate #{index} = {value} is not in the unit interval")]
    PointOutOfRange { index: usize, value: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex {0} is outside the index range of the matrix")]
    VertexOutOfRange(u32),
    #[error("no copula assigned to {0}")]
    UnassignedLabel(EdgeLabel),
    #[error("conditional distribution for {label} cannot be realised: no lower-level edge with union {union}")]
    PivotNotFound { label: EdgeLabel, union: VertexSet },
    #[error("partial correlation query is ill-posed: {0}")]
    BadQuery(&'static str),
}

fn not_truncated(offender: &Option<Offender>) -> alloc::string::String {
    match offender {
        Some(o) => alloc::format!("not a truncated R-vine: {o}"),
        None => alloc::string::String::from("not a truncated R-vine"),
    }
}
