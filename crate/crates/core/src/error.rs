use thiserror::Error;

/// Failures raised by the geometric pipeline.
///
/// Most variants signal that an input was not general enough; callers usually
/// redraw the offending object and retry.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("polynomial is identically zero: {0}")]
    IdenticallyZero(String),
    #[error("count mismatch in {what}: expected {expected}, found {found}")]
    CountMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("no generic web found after {attempts} attempts")]
    GenericityExhausted { attempts: usize },
    #[error("kernel is at least two-dimensional at this point")]
    RankDeficiencyAmbiguous,
    #[error("sample budget of {budget} draws exceeded")]
    SampleBudgetExceeded { budget: usize },
    #[error("pencil quartic is not a perfect square (pair gap {gap:.3e})")]
    BitangencyFailed { gap: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("point does not lie on the quadric (residual {0:.3e})")]
    PointNotOnQuadric(f64),
    #[error("point is the vertex of a quadric cone")]
    VertexPoint,
    #[error("lines do not lie on the quadric")]
    LinesNotOnQuadric,
    #[error("transport step underflow at parameter {at}")]
    StepUnderflow { at: f64 },
    #[error("path hits the branch surface at parameter {at}")]
    BranchHit { at: f64 },
    #[error("quadric rank {0} is too low")]
    RankTooLow(usize),
    #[error("leading coefficient vanished; reparametrize")]
    DegreeDrop,
    #[error("Schubert grade overflow")]
    GradeOverflow,
    #[error("I/O: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
