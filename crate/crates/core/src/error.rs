use alloc::string::String;
use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coefficient or quotient that must be strictly positive was not.
    NonPositive { index: usize },
    /// A textual input failed to parse.
    Parse { line: usize, message: String },
    /// A budget or argument was below the minimum the operation requires.
    BadArgument(String),
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// An interval computation could not decide a sign/containment question
    /// at the precision cap.
    PrecisionCap(String),
    /// A winding-number computation could not certify nonvanishing on the
    /// circle; carries the offending arc `[theta_lo, theta_hi]`.
    InconclusiveArc { theta_lo: f64, theta_hi: f64 },
    /// A hypothesis of the operation does not hold for the given input.
    Hypothesis(String),
    /// A membership question landed inside the certified `q_∞` bracket.
    Undecidable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive { index } => {
                write!(f, "nonpositive coefficient/quotient at index {index}")
            }
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::BadArgument(m) => write!(f, "bad argument: {m}"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::PrecisionCap(m) => write!(f, "precision cap reached: {m}"),
            Error::InconclusiveArc { theta_lo, theta_hi } => write!(
                f,
                "cannot certify nonvanishing on arc [{theta_lo}, {theta_hi}]"
            ),
            Error::Hypothesis(m) => write!(f, "hypothesis violated: {m}"),
            Error::Undecidable(m) => write!(f, "undecidable: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
