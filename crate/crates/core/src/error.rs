use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("domain of size {size} exceeds the enumeration bound {bound}")]
    DomainTooLarge { size: u128, bound: u128 },
    #[error("labeling {0} is not in X^- (it has a (1,1) pair)")]
    NotInXMinus(String),
    #[error("labeling {0} is outside X^*")]
    OutsideXStar(String),
    #[error("node {node} out of range for {count} nodes")]
    InvalidNode { node: usize, count: usize },
    #[error("labeling {0} is not integral")]
    NonIntegral(String),
    #[error("labeling {0} is not a minimizer")]
    NotMinimizer(String),
    #[error("persistency failed: completion value {completion} exceeds binary minimum {minimum}")]
    PersistencyViolated { completion: String, minimum: String },
    #[error("pairwise term on ({0}, {1}) is not submodular")]
    NonSubmodularTerm(usize, usize),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
    #[error("edge ({0}, {1}) must have distinct endpoints")]
    SelfLoop(usize, usize),
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("domain not covered: first missing labeling {0}")]
    Coverage(String),
    #[error("function is not cardinality-dependent")]
    NotCardinalityDependent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("linear program: {0}")]
    Lp(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
