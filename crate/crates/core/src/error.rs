use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rotation of empty word")]
    EmptyRotation,

    #[error("{0} of the empty word is undefined")]
    EmptyWord(&'static str),

    #[error("word `{0}` is not cyclically reduced")]
    NotCyclicallyReduced(String),

    #[error("alphabet must have at least one generator")]
    EmptyAlphabet,

    #[error("generator {index} exceeds alphabet size {q}")]
    LetterOutOfRange { index: u32, q: u16 },

    #[error("malformed word token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("no extremal pair: class has periodic shape")]
    NoExtremalPair,

    #[error("index pair ({0}, {1}) outside the grid")]
    PairOutOfRange(usize, usize),

    #[error("coefficient arithmetic overflow")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),
}
