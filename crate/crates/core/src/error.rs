use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition token `{token}`: {reason}")]
    PartitionParse { token: String, reason: String },

    #[error("invalid rational `{0}`")]
    RationalParse(String),

    #[error("weights require integral δ (got {0})")]
    NonIntegralWeightDelta(String),

    #[error("block keys require integral δ (got {0})")]
    NonIntegralBlockDelta(String),

    #[error("index {index} does not lie in the index set for δ = {delta}")]
    IndexParity { index: String, delta: i64 },

    #[error("orbits compare only within one sector (charges {lhs} and {rhs})")]
    ChargeMismatch { lhs: String, rhs: String },

    #[error("need at least {needed} γ coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },

    #[error("partition {partition} has more than n = {n} parts")]
    LengthExceedsRank { partition: String, n: usize },

    #[error("rank n = {n} exceeds the dot-orbit cap of {cap}")]
    RankCap { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
