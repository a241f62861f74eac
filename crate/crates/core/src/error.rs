use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("threshold z must be a finite number >= 2, got {0}")]
    InvalidThreshold(f64),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("position {position}: letter index {letter} is outside an alphabet of size {sigma}")]
    LetterOutOfRange {
        position: usize,
        letter: usize,
        sigma: usize,
    },

    #[error("position {position}: letter index {letter} appears more than once")]
    DuplicateLetter { position: usize, letter: usize },

    #[error("position {position}: probability {value} is not a positive finite number")]
    InvalidProbability { position: usize, value: f64 },

    #[error("position {position}: probabilities sum to {sum}, expected 1")]
    SumOutOfTolerance { position: usize, sum: f64 },

    #[error("position {0} has no letters")]
    EmptyPosition(usize),

    #[error("every position is black, no black-free run exists")]
    AllBlackOrTooMany,

    #[error("black position {0} inside a projection range")]
    BlackInRange(usize),

    #[error("cannot split a length-{m} pattern into {parts} non-empty fragments")]
    FragmentTooShort { m: usize, parts: usize },

    #[error("pattern and text are over different alphabets")]
    AlphabetMismatch,

    #[error("pattern length {m} must be smaller than text length {n}")]
    PatternLongerThanText { m: usize, n: usize },

    #[error("pattern is empty")]
    EmptyPattern,
}
