use thiserror::Error;

/// Everything that can go wrong when parsing input or calling the algorithms.
///
/// Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { position: usize, ch: char },
    #[error("empty set at position {position}")]
    EmptySet { position: usize },
    #[error("unclosed bracket at position {position}")]
    UnclosedBracket { position: usize },
    #[error("duplicate letter {ch:?} in set at position {position}")]
    DuplicateLetter { position: usize, ch: char },
    #[error("invalid integer {text:?} at entry {position}")]
    InvalidInteger { position: usize, text: String },
    #[error("infeasible at position {position}")]
    Infeasible { position: usize },
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("cover length {k} out of range 1..{len}")]
    CoverLengthOutOfRange { k: usize, len: usize },
    #[error("invalid benchmark configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
