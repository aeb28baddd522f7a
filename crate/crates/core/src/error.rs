use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("rank {index} out of range for n = {n}")]
    RankOutOfRange { index: u64, n: usize },
    #[error("{0} is not an involution")]
    NotAnInvolution(String),
    #[error("{0} is not the canonical word of an involution")]
    NotCanonicalWord(String),
    #[error("bad partition spec: {0}")]
    PartitionSpec(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no published data for {0}")]
    NoPublishedData(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
