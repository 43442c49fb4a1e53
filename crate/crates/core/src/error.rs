use thiserror::Error;

use crate::combinat::SubsetMask;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..={max}", max = crate::MAX_GROUND)]
    GroundSetSize(usize),

    #[error("element {element} is outside the ground set 1..={m}")]
    ElementOutOfRange { element: usize, m: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("family is not closed under union and intersection: {left} and {right}")]
    NotLattice { left: SubsetMask, right: SubsetMask },

    #[error("empty family of sets")]
    EmptyFamily,

    #[error("lattice is not natural")]
    NotNatural,

    #[error("support of the distribution is not a natural distributive lattice")]
    NotNaturalSupport,

    #[error("invalid CI triple: {0}")]
    InvalidTriple(String),

    #[error("CI statement is not saturated")]
    Unsaturated,

    #[error("negative value {value} at {set}")]
    NegativeValue { set: SubsetMask, value: String },

    #[error("matrix column {0} has no nonzero entry")]
    EmptyColumn(SubsetMask),

    #[error("{0} is not a column of the matrix")]
    UnknownColumn(SubsetMask),

    #[error("column labels of the two matrices differ")]
    ColumnMismatch,

    #[error("parameter vector has length {got}, matrix has {expected} rows")]
    ParamLength { expected: usize, got: usize },

    #[error("column set is not feasible: column {0} is covered")]
    NotFeasible(SubsetMask),

    #[error("bad facial certificate at column {column}: {reason}")]
    BadCertificate { column: SubsetMask, reason: String },

    #[error("exponent c.a at column {0} is not a nonnegative integer")]
    NonIntegerExponent(SubsetMask),

    #[error("parameters must be strictly positive: {0}")]
    NonPositiveParameter(String),

    #[error("cover pair {upper} > {lower} is not an edge of the graph")]
    MissingCoverEdge { upper: usize, lower: usize },

    #[error("pairwise binomial for {set} with non-edge ({i},{j}) does not vanish")]
    PairwiseViolation { set: SubsetMask, i: usize, j: usize },

    #[error("clique {0} has no maximum element in the poset")]
    NotComparabilitySubgraph(SubsetMask),

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
