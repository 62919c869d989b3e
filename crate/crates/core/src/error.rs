use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library. Positions carried in variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {labels} labels but {guesses} guesses")]
    LengthMismatch { labels: usize, guesses: usize },

    #[error("duplicate guess: entries {first} and {second} are equal")]
    DuplicateGuess { first: usize, second: usize },

    #[error("guess {index} cannot be ordered against the others")]
    IncomparableGuess { index: usize },

    #[error("at least 2 guesses are required, got {0}")]
    TooFewGuesses(usize),

    #[error("AUC undefined: all {n} examples belong to one class (n1 = {n1})")]
    UndefinedAuc { n: usize, n1: usize },

    #[error("invalid left-swap at index {index}: {reason}")]
    InvalidSwap { index: usize, reason: &'static str },

    #[error("invalid shape: n1 = {n1} exceeds n = {n}")]
    InvalidShape { n: usize, n1: usize },

    #[error("labeling has no positive examples")]
    EmptyClass,

    #[error("invalid swap vector: {0}")]
    InvalidSwapVector(String),

    #[error("invalid AUC {p}/{q}: need q > 0 and 0 <= p <= q")]
    InvalidAuc { p: u64, q: u64 },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("line {line}: {message}")]
    ParseLine { line: usize, message: String },

    #[error("memo table would need {requested} bytes, cap is {cap}")]
    CapacityExceeded { requested: usize, cap: usize },

    #[error("count does not fit the chosen integer type")]
    CountOverflow,

    #[error("n = {n} exceeds the exhaustive limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}
