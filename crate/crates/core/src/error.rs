use thiserror::Error;

use crate::spec::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// 1-based line and column of a byte offset in the input text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SourcePos {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for SourcePos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: SourcePos, message: String },
    #[error("invalid ring specification: {}", render_diagnostics(.0))]
    Validation(Vec<Diagnostic>),
    #[error("truncation order {0} is too small (need at least 2)")]
    TruncationTooSmall(usize),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("order {order} out of range 0..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("element is zero in the truncation")]
    ZeroElement,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("second argument is not contained in the first")]
    NotASubspace,
    #[error("no stabilization: {0}")]
    NoStabilization(String),
    #[error("declared dimension {declared} but the Hilbert function grows like dimension {computed}")]
    DeclaredDimension { declared: usize, computed: usize },
    #[error("no superficial element found after {attempts} attempts (try a larger prime or Q)")]
    NoSuperficialFound { attempts: usize },
    #[error("b-polynomial mismatch: colon lengths {direct:?}, division gives {division:?}")]
    InconsistentBPolynomial { direct: Vec<i64>, division: Vec<i64> },
    #[error("operation needs dimension {expected}, ring has dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("ring is not Cohen-Macaulay: length of A/J is {colength}, multiplicity is {multiplicity}")]
    NotCohenMacaulay { colength: usize, multiplicity: i64 },
    #[error("cross-check failed: {0}")]
    CrossCheckFailure(String),
    #[error("semigroup presentation needs too many relations: {0}")]
    ConversionOverflow(String),
    #[error("report is missing {0}")]
    IncompleteReport(&'static str),
}

fn render_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::Validation(_) | Error::DeclaredDimension { .. } => 2,
            Error::ResourceLimit(_) | Error::ConversionOverflow(_) | Error::NoStabilization(_) => 3,
            _ => 1,
        }
    }
}
