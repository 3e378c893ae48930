use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    EmptyPermutation,
    #[error("duplicate value {0}")]
    DuplicateValue(u32),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("cannot parse {0:?} as a positive integer")]
    ParseInt(String),
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("n must be at least 1")]
    EmptyDomain,
    #[error("rank {rank} out of range for n = {n} (n! = {total})")]
    RankOutOfRange { rank: u64, n: usize, total: u64 },
    #[error("n = {0} exceeds the ranking limit of 20")]
    RankingLimit(usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("pattern of length {pattern} is longer than word of length {word}")]
    PatternTooLong { pattern: usize, word: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid subsequence: {0}")]
    InvalidSubsequence(String),
    #[error("family parameter k must be at least 3, got {0}")]
    FamilyParameter(usize),
    #[error("tableau is not two-column: first row has {0} entries")]
    NotTwoColumn(usize),
    #[error("n = {n} outside the configured survey range 1..={max}")]
    SurveyRange { n: usize, max: usize },
    #[error("jobs must be at least 1")]
    ZeroJobs,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
