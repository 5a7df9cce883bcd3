use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KzError {
    #[error("scalar has a zero denominator")]
    DegenerateScalar,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("expression has a pole at the requested point")]
    EvaluationAtPole,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("series order must be non-negative, got {0}")]
    NegativeOrder(i64),
    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),
    #[error("unsolvable resonance at level {level}: rhs has component {component} along the kernel eigenvector {eigenvector}")]
    UnsolvableResonance {
        level: i64,
        eigenvector: String,
        component: String,
    },
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("invalid integration path: {0}")]
    InvalidPath(String),
    #[error("operation needs numeric pole locations")]
    NotNumeric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
}

pub type Result<T, E = KzError> = std::result::Result<T, E>;
