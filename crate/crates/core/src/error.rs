use thiserror::Error;

/// Errors raised by profile construction, the solver front ends and the file parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alternative id {0:?}")]
    InvalidAlternative(String),
    #[error("duplicate alternative {0}")]
    DuplicateAlternative(String),
    #[error("agenda must contain at least one alternative")]
    EmptyAgenda,
    #[error("alternative {0} is not part of the agenda")]
    ForeignAlternative(String),
    #[error("order does not rank exactly the agenda's alternatives")]
    WrongAlternatives,
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("all weights are zero")]
    NoPositiveWeight,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("pairwise comparison needs two distinct alternatives, got {0} twice")]
    SameAlternative(String),
    #[error("profiles or lotteries are over different agendas")]
    AgendaMismatch,
    #[error("coefficients do not form a convex combination")]
    NotConvexCombination,
    #[error("relabeling is not a bijection: {0}")]
    NotBijective(String),
    #[error("agendas must intersect exactly in {0}")]
    OverlapViolated(String),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("matrix has wrong shape: {0}")]
    Shape(String),
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("matrix is not regular on the prefix set, or is nonzero outside it")]
    NotRegular,
    #[error("{0} is not a component of the profile")]
    NotComponent(String),
    #[error("agendas {0} and {1} do not overlap")]
    EmptyIntersection(String, String),
    #[error("agendas do not cover the profile's agenda")]
    AgendaCover,
    #[error("lottery probabilities must be nonnegative and sum to 1")]
    InvalidLottery,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("polytope has {0} vertices; pick one with --vertex")]
    MultipleVertices(usize),
    #[error("vertex index {index} out of range ({count} vertices)")]
    VertexIndex { index: usize, count: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
