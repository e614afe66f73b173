use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value {0} appears more than once")]
    DuplicateValue(usize),
    #[error("value {value} is outside 1..={len}; the values do not form a permutation")]
    Gap { len: usize, value: usize },
    #[error("cannot parse {0:?} as a permutation entry")]
    BadToken(String),
    #[error("compact digit form is only accepted for n <= 9 (got {0} digits); separate entries with commas")]
    AmbiguousCompact(usize),
    #[error("permutations longer than 255 are not supported (got {0})")]
    TooLong(usize),
    #[error("position {position} is out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    #[error("rank {rank} is out of range for {total} permutations")]
    RankOutOfRange { rank: u64, total: u64 },
    #[error("{what} {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("{0} is not a valid occurrence of the requested pattern")]
    InvalidOccurrence(String),
    #[error("{0} is not a down/up alternating permutation")]
    NotAlternating(String),
    #[error("{0} does not have maximal rev-tier n - 2")]
    NotMaximalTier(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("series error: {0}")]
    Series(String),
}
