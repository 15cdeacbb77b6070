use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 2, got {0}")]
    DegenerateCircle(usize),
    #[error("k must satisfy 1 <= k <= n-1 (n = {n}, k = {k})")]
    DegenerateSubset { n: usize, k: usize },
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("label {0} appears more than once")]
    DuplicateLabel(usize),
    #[error("expected {expected} labels, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("invalid rim token {token:?}: {reason}")]
    BadToken { token: String, reason: &'static str },
    #[error("rims live on different circles: (n, k) = ({n1}, {k1}) vs ({n2}, {k2})")]
    MismatchedParameters {
        n1: usize,
        k1: usize,
        n2: usize,
        k2: usize,
    },
    #[error("the rim is a single interval, so L_I is projective")]
    ProjectiveModule,
    #[error("operation needs exactly two peaks, rim has {0}")]
    NotTwoPeak(usize),
    #[error("kernel relation failed in row {row}")]
    KernelRelationFailed { row: usize },
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("box list is empty")]
    EmptyInput,
    #[error("invariant factor {index} is not a monomial")]
    NonMonomialFactor { index: usize },
    #[error("size {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("degree {0} is even, expected an odd degree")]
    EvenDegree(u32),
    #[error("degree {0} is odd, expected an even degree >= 2")]
    OddDegree(u32),
    #[error("degree {degree} is outside 1..={cap}")]
    DegreeOutOfRange { degree: u32, cap: u32 },
}
