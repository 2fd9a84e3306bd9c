use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty continued fraction")]
    EmptySequence,
    #[error("degenerate fraction {0}: alpha must be at least 2")]
    Degenerate(String),
    #[error("no +-1 sequence of length <= {cap} found")]
    NotFound { cap: usize },
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("diagram {0} has an islet; crossing number formula does not apply")]
    Islet(String),
    #[error("diagram {0} has a zero entry")]
    ZeroEntry(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("non-nodal configuration near {what} in [{lo}, {hi}]")]
    NonNodal { what: String, lo: String, hi: String },
    #[error("parametrization is not injective: z(t) = z(s) at crossing {0}")]
    NotInjective(usize),
    #[error("perturbation too large: got {got} crossings, expected {expected}")]
    EpsTooLarge { got: usize, expected: usize },
    #[error("height polynomial verification failed at parameter {0}")]
    HeightCheck(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown knot {0}")]
    UnknownKnot(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
