use thiserror::Error;

/// Which bound a missing glb/lub refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "greatest lower bound"),
            BoundKind::Join => write!(f, "least upper bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty poset (n = 0) is not accepted as input")]
    EmptyPoset,

    #[error("cycle detected through element {0}")]
    CycleDetected(usize),

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("size {size} exceeds bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("not a lattice: elements {a} and {b} have no {kind}")]
    NotALattice { a: usize, b: usize, kind: BoundKind },

    #[error("not distributive: a∧(b∨c) ≠ (a∧b)∨(a∧c) at (a, b, c) = ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },

    #[error("set is not a filter: {reason}")]
    NotAFilter { reason: String },

    #[error("not a topology: {reason}")]
    NotATopology { reason: String },

    #[error("not T0: points {x} and {y} are topologically indistinguishable")]
    NotT0 { x: usize, y: usize },

    #[error("space is not sober")]
    NotSober,

    #[error("isomorphism failure: {0}")]
    IsoFailure(String),

    #[error("descriptor does not belong to this fixture: {0}")]
    FixtureMismatch(String),

    #[error("family rule does not belong to this fixture")]
    UnknownRule,

    #[error("filter is not Scott-open")]
    NotScottOpen,
}

pub type Result<T> = std::result::Result<T, Error>;
