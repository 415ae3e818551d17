use thiserror::Error;

/// Library-wide error type. Input-contract violations map to CLI exit 1,
/// cap overruns to exit 2; anything that panics is an internal bug (exit 3).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands belong to different polynomial rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("ideal presentations require nonzero generators")]
    ZeroGenerator,
    #[error("improper ideal: it contains a nonzero constant")]
    ImproperIdeal,
    #[error("more than {cap} minimal primes; raise the prime cap to continue")]
    MinimalPrimeCap { cap: usize },
    #[error("{count} primes exceed the subset cap {cap}; raise the subset cap to continue")]
    SubsetCapExceeded { count: usize, cap: usize },
    #[error("facet list is not pure: facets of cardinality {expected} and {found}")]
    NonPureFacets { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Positioned syntax error from the input-document parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    /// 1-based line of the offending token.
    pub line: usize,
    /// 1-based column of the offending token.
    pub col: usize,
    pub message: String,
    /// What the parser would have accepted at this point.
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(" | "))
    }
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
