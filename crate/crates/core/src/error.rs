use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant carries a stable machine-readable code (see [`Error::code`])
/// that the CLI and the C API surface unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },

    #[error("coefficient at column {column} is not an integer literal")]
    BadCoefficient { column: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("quotient has infinite length")]
    InfiniteLength,

    #[error("image generator does not lie in the kernel span")]
    LiftFailure,

    #[error("no nonvanishing Ext found up to index {0}")]
    GradeBoundExceeded(usize),

    #[error("d^2 != 0 across the splice map at position {0}")]
    SpliceMismatch(usize),

    #[error("d^2 != 0 at position {0}")]
    NotAComplex(usize),

    #[error("homology at position {0} has infinite length")]
    InfiniteHomology(i64),

    #[error("finite-length certificate missing: M (x) L is not supported only at the origin")]
    CertificateMissing,

    #[error("samples are not yet polynomial of degree <= {0}")]
    NotYetPolynomial(usize),

    #[error("length function did not stabilize before nu0 = {0}")]
    NonPolynomialBehavior(i64),

    #[error("the ideal is not an ideal of definition")]
    NotIdealOfDefinition,

    #[error("unknown command `{0}`")]
    UnknownCommand(String),

    #[error("line {line}: {message}")]
    Session { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable identifier used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable { .. } => "unknown_variable",
            Error::BadCoefficient { .. } => "bad_coefficient",
            Error::NotPrime(_) => "not_prime",
            Error::RingMismatch => "ring_mismatch",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::LengthMismatch(..) => "length_mismatch",
            Error::InfiniteLength => "infinite_length",
            Error::LiftFailure => "lift_failure",
            Error::GradeBoundExceeded(_) => "grade_bound_exceeded",
            Error::SpliceMismatch(_) => "splice_mismatch",
            Error::NotAComplex(_) => "not_a_complex",
            Error::InfiniteHomology(_) => "infinite_homology",
            Error::CertificateMissing => "certificate_missing",
            Error::NotYetPolynomial(_) => "not_yet_polynomial",
            Error::NonPolynomialBehavior(_) => "non_polynomial_behavior",
            Error::NotIdealOfDefinition => "not_ideal_of_definition",
            Error::UnknownCommand(_) => "unknown_command",
            Error::Session { .. } => "session",
            Error::InvalidInput(_) => "invalid_input",
        }
    }

    /// Whether the error stems from user input rather than a computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::BadCoefficient { .. }
                | Error::NotPrime(_)
                | Error::UnknownCommand(_)
                | Error::Session { .. }
                | Error::InvalidInput(_)
                | Error::CertificateMissing
                | Error::NotIdealOfDefinition
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
