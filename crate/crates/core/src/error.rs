use thiserror::Error;

use crate::ordering::StructureWitness;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed interval for vertex {vertex}: left endpoint {lo} exceeds right endpoint {hi}")]
    MalformedInterval { vertex: usize, lo: String, hi: String },

    #[error("vertex {0} has no self-loop (S and T intervals are disjoint)")]
    NotReflexive(usize),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("ordering contains a forbidden structure: {0}")]
    ForbiddenStructure(StructureWitness),

    #[error("ordering is not a DUF-ordering: {0}")]
    NotDufOrdered(StructureWitness),

    #[error("ordering is not umbrella-free: {0}")]
    NotCocompOrdered(StructureWitness),

    #[error("representation is not adjusted: vertex {0} has l(S) != l(T)")]
    NotAdjusted(usize),

    #[error("digraph has a self-loop on vertex {0}")]
    NotIrreflexive(usize),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("subdivision parameter k = {0} is odd")]
    OddSubdivision(usize),

    #[error("oracle budget exceeded: {n} vertices, limit {limit}")]
    BudgetExceeded { n: usize, limit: usize },

    #[error("oracle time cap exceeded")]
    TimeCapExceeded,

    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
