use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),
    #[error("arity or alphabet mismatch: {0}")]
    ArityMismatch(String),
    #[error("cannot project an automaton of arity 1")]
    CannotProject,
    #[error("padding invariant violated: {0}")]
    Padding(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("formula has free variables: {0:?}")]
    NotASentence(Vec<String>),
    #[error("expected exactly one free variable, found {0:?}")]
    NotUnary(Vec<String>),
    #[error("state budget of {0} states exceeded")]
    StateBudgetExceeded(usize),
    #[error("relation `{0}` accepts tuples outside the domain")]
    OutsideDomain(String),
    #[error("ordinal is not a limit: {0}")]
    NotALimit(String),
    #[error("fundamental sequence missing for {0}")]
    MissingFs(String),
    #[error("ill-formed notation system: {0}")]
    IllFormedSystem(String),
    #[error("order presentation is not linear: {0}")]
    NotLinear(String),
    #[error("presentation is not a well-order")]
    NotComparable,
    #[error("predicate diverged at {0}")]
    PredicateDiverged(String),
    #[error("invalid Turing machine: {0}")]
    InvalidTm(String),
    #[error("machine is not reversible: {0}")]
    NotReversible(String),
    #[error("level {k} outside 1..={level}")]
    BadLevel { k: usize, level: usize },
    #[error("operation would empty a pushdown store")]
    EmptyPds,
    #[error("invalid pushdown automaton: {0}")]
    InvalidHopda(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
