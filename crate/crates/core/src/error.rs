use thiserror::Error;

/// Errors reported by parsing, construction and the size guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed edge token `{0}`: expected `a-b` with positive integer labels")]
    MalformedToken(String),
    #[error("vertex {vertex} repeated in token `{token}`")]
    RepeatedVertex { vertex: usize, token: String },
    #[error("edge token `{0}` joins a vertex to itself")]
    SelfLoop(String),
    #[error("labels are not contiguous: vertex {missing} is missing (largest label is {max})")]
    NonContiguous { missing: usize, max: usize },
    #[error("gap {gap} out of range 1..={max}")]
    GapOutOfRange { gap: usize, max: usize },
    #[error("operation requires a nonempty matching")]
    EmptyMatching,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("size guard: {what} needs {required} items, cap is {cap}")]
    CapExceeded { what: String, required: String, cap: u64 },
    #[error("matchings have different sizes ({left} vs {right} edges)")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown statistic preset `{0}`")]
    UnknownPreset(String),
    #[error("matching has no {0} pair")]
    NoSuchPair(&'static str),
    #[error("invalid Dyck word: {0}")]
    InvalidDyck(String),
    #[error("invalid composition: {0}")]
    InvalidProfile(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
