use thiserror::Error;

/// Domain errors raised by the polyhedral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    /// An operation whose precondition requires a nonempty set received an empty one.
    #[error("{0}")]
    EmptySet(&'static str),

    #[error(
        "optimal value construction requires a proper objective: the epigraph projection \
         identity only holds when phi is proper (nonempty epigraph, never -inf)"
    )]
    ImproperObjective,

    #[error("epigraph is not closed upward in its last coordinate")]
    NotAnEpigraph,

    #[error("oracle size guard violated: {0}")]
    SizeGuard(String),

    #[error("point is not a member of the set")]
    NotInSet,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { context, expected, found })
    }
}
