use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: i64, bound: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("braid is not pure: permutation {0:?}")]
    NotPure(Vec<usize>),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("degree {degree} exceeds truncation {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("identity element has no leading term")]
    IdentityInput,

    #[error("internal failure: {0}")]
    Internal(String),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("relation violated: {0}")]
    RelationViolated(String),

    #[error("missing boundary data for degree {0}")]
    MissingBoundary(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange {
            index: index as i64,
            bound,
        })
    } else {
        Ok(())
    }
}
