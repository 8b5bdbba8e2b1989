use thiserror::Error;

/// Errors raised by group construction, structural queries and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("subgroup of order {order} is not normal")]
    NotNormal { order: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the trivial group has no non-trivial conjugacy classes")]
    DegenerateGroup,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("term count {k} exceeds the configured cap of {cap}")]
    CapExceeded { k: usize, cap: usize },

    #[error("exact arithmetic overflowed")]
    Overflow,

    #[error("cannot parse group file: {0}")]
    FileParse(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
