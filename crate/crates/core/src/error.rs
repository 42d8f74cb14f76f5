use thiserror::Error;

/// A parse failure, annotated with the 1-based line it occurred on
/// (0 when the input is a single token).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("nothing to eliminate: input has degree zero in the eliminated variable")]
    NothingToEliminate,

    #[error("curve {index}: {reason}")]
    InvalidCurve { index: usize, reason: String },

    #[error("curves {0} and {1} are proportional (duplicate curve)")]
    DuplicateCurves(usize, usize),

    #[error("arrangement has no curves")]
    EmptyArrangement,

    #[error("identical curves")]
    IdenticalCurves,

    #[error("point does not lie on the curve")]
    NotOnCurve,

    #[error("invalid combinatorial type: {0}")]
    InvalidType(String),

    #[error("smooth arrangement, H-index undefined")]
    UndefinedHIndex,

    #[error("log-Chern slope undefined: c2 = 0")]
    UndefinedSlope,

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("unknown catalog entry {name:?}; valid names: {}", valid.join(", "))]
    UnknownEntry { name: String, valid: Vec<String> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    EmptySearch(String),

    #[error("could not find generic coordinates after {0} attempts")]
    NoGenericProjection(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
