use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: malformed input (bad shapes, syntax,
/// structure violations) and failed mathematical preconditions (a germ
/// that is not isolated, a construction whose hypothesis does not hold).
/// [`Error::is_input_error`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("structure violation: {0}")]
    Structure(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("not a germ: constant term {0} is nonzero")]
    NotAGerm(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("critical point is not algebraically isolated: {0}")]
    NonIsolated(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("map vanishes on the circle of radius {0}")]
    RadiusTooLarge(String),
    #[error("subdivision limit of {0} arcs exceeded")]
    Inconclusive(usize),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("impossible degree: {0}")]
    ImpossibleDegree(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("spinning undefined: {0}")]
    SpunUndefined(String),
    #[error("construction hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// True for malformed input, false for mathematical precondition failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Dimension(_)
                | Error::Structure(_)
                | Error::Syntax { .. }
                | Error::NotAGerm(_)
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
