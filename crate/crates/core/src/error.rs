use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} beyond truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate equation: {0}")]
    DegenerateEquation(String),
    #[error("leading coefficient vanishes at n = {0}")]
    LeadingCoefficientZero(i64),
    #[error("need {needed} initial values, got {got}")]
    InsufficientInitialValues { needed: usize, got: usize },
    #[error("window of length {window} does not fit a sequence of length {len}")]
    WindowTooLong { window: usize, len: usize },
    #[error("no rational function found within degree bounds")]
    NoRationalFunction,
    #[error("unsupported infinite support")]
    InfiniteSupport,
}

pub type Result<T> = std::result::Result<T, Error>;
