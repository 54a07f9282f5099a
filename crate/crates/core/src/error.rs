use thiserror::Error;

use crate::enumeration::Mode;
use crate::natural::Natural;

pub type Result<T> = std::result::Result<T, LacError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LacError {
    #[error("permutation mode requires p = n (got n = {n}, p = {p})")]
    PermutationLengthMismatch { n: usize, p: usize },

    #[error("invalid {mode} selection: {reason}")]
    InvalidSelection { mode: Mode, reason: String },

    #[error("rank {rank} out of range: the family has {count} selections")]
    RankOutOfRange { rank: Natural, count: Natural },

    #[error("materialization needs {required} cells, cap is {cap}")]
    CapExceeded { required: Natural, cap: u64 },

    #[error("only p = 2 tensors can be rendered as a matrix (got p = {p})")]
    NotRenderable { p: usize },

    #[error("duplicate alphabet symbol {0:?}")]
    DuplicateSymbol(String),

    #[error("alphabet symbols must be non-empty")]
    EmptySymbol,
}
