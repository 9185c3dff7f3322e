use std::fmt;

use thiserror::Error;

/// Why a pair of poset elements fails to have a join or a meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    NoUpperBound,
    NoLeastUpperBound,
    NoLowerBound,
    NoGreatestLowerBound,
}

impl fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundFailure::NoUpperBound => "no upper bound",
            BoundFailure::NoLeastUpperBound => "no unique minimal upper bound",
            BoundFailure::NoLowerBound => "no lower bound",
            BoundFailure::NoGreatestLowerBound => "no unique maximal lower bound",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("order is not antisymmetric: {x} <= {y} <= {x}")]
    AntisymmetryViolation { x: usize, y: usize },

    #[error("relation on {n} elements is not a partial order: {reason}")]
    NotAPartialOrder { n: usize, reason: String },

    #[error("empty poset has no bottom or top")]
    EmptyLattice,

    #[error("not a lattice: elements {x} and {y} have {reason}")]
    NotALattice {
        x: usize,
        y: usize,
        reason: BoundFailure,
    },

    #[error("element {0} is not irreducible")]
    NotIrreducible(usize),

    #[error("lattice is not semidistributive (witness x={x}, y={y}, z={z})")]
    NotSemidistributive { x: usize, y: usize, z: usize },

    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),

    #[error("{0} -> {1} is not a cover relation")]
    NotACover(usize, usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("cover {lower} -> {upper} has no brick label")]
    LabelMissing { lower: usize, upper: usize },

    #[error("cover {lower} -> {upper} has {count} candidate brick labels")]
    LabelNotUnique {
        lower: usize,
        upper: usize,
        count: usize,
    },

    #[error("invalid quiver presentation: {0}")]
    InvalidQuiver(String),

    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("hom space has dimension {0}, expected at most 1")]
    UnexpectedHomDim(usize),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
