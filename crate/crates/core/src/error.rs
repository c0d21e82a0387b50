use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("weight has {got} coordinates but the root system has rank {rank}")]
    LengthMismatch { rank: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not in the bottom alcove")]
    OutsideAlcove(String),
    #[error("p = {0} is not an odd prime")]
    BadPrime(u64),
    #[error("quantum order ell = {0} is excluded (ell must be at least 5 and ell ∈ {{2,3,4,6}} is excluded)")]
    BadQuantumOrder(u64),
    #[error("quantum parameters are only supported for families A-GL and C, not {0}")]
    QuantumUnsupported(&'static str),
    #[error("family B is not minuscule; use the alternating-sum engine")]
    NotMinuscule,
    #[error("invalid algebra configuration: {0}")]
    InvalidConfig(String),
    #[error("level r must be at least 1")]
    ZeroLevel,
    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("oracle produced a negative coefficient at {0}")]
    NegativeCoefficient(String),
    #[error("empty state set")]
    EmptyStates,
}
