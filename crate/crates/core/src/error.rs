use thiserror::Error;

/// Which configurable cap a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    Pairs,
    Degree,
    CoefficientBits,
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitKind::Pairs => write!(f, "S-pair count"),
            LimitKind::Degree => write!(f, "intermediate degree"),
            LimitKind::CoefficientBits => write!(f, "coefficient bit-size"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("variable index {index} out of range ({count} variables)")]
    VariableIndex { index: usize, count: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("monomial order {0} is not a global order")]
    NotGlobalOrder(String),
    #[error("resource limit exceeded: {kind} (cap {cap})")]
    ResourceLimit { kind: LimitKind, cap: u64 },
    #[error("invalid map germ: {0}")]
    InvalidGerm(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("stratum description too coarse: {0}")]
    StratumTooCoarse(String),
    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),
    #[error("not an ICIS: {0}")]
    NotIcis(String),
    #[error("genericity failure: {0}")]
    GenericityFailure(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
