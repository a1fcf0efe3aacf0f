use thiserror::Error;

/// Errors raised by diagram construction, moves, reduction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("band {top}-{bottom} out of range for {strands} strands")]
    BandRange {
        top: usize,
        bottom: usize,
        strands: usize,
    },

    #[error("generator {index} out of range for {strands} strands")]
    LetterRange { index: usize, strands: usize },

    #[error("move not applicable: {0}")]
    NotApplicable(String),

    #[error("slide target equals the current form")]
    BadTarget,

    #[error("bad split: {0}")]
    BadSplit(String),

    #[error("diagram is not connected")]
    NotConnected,

    #[error("diagram is not a quasipositive annulus")]
    NotAnnulus,

    #[error("invalid front: {0}")]
    InvalidFront(String),

    #[error("braid word has {crossings} crossings, above the bound of {bound}")]
    TooLarge { crossings: usize, bound: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("range error at line {line}: {message}")]
    Range { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
