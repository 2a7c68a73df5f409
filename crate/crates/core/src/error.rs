use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("alphabet of size {0} has no textual rendering (limit is 26)")]
    AlphabetTooLarge(usize),
    #[error("alphabet of size {0} exceeds the 255-letter limit")]
    AlphabetUnsupported(usize),
    #[error("letter {letter:?} is outside the alphabet of size {size}")]
    LetterOutOfRange { letter: char, size: usize },
    #[error("letter rank {rank} is outside the alphabet of size {size}")]
    RankOutOfRange { rank: u8, size: usize },
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("`{0}` is not a Lyndon word")]
    NotLyndon(String),
    #[error("Lyndon word `{0}` is too short for a standard factorization")]
    TooShort(String),
    #[error("iterated standard factorization of `{word}` reached remainder `{remainder}` before stopping")]
    IsfExhausted { word: String, remainder: String },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("value {value} is outside [1, {n}]")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("descent set {des:?} is not contained in {set:?}")]
    DescentsNotInSet { des: Vec<usize>, set: Vec<usize> },
    #[error("ascent set {asc:?} is not contained in {set:?}")]
    AscentsNotInSet { asc: Vec<usize>, set: Vec<usize> },
    #[error("permutation is not in the required cycle-parity class: {0}")]
    WrongParityClass(String),
    #[error("Bona's map is only defined for even n (got {0})")]
    OddLength(usize),
    #[error("necklace weight {found:?} does not match composition {expected:?}")]
    WeightMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("invalid necklace multiset: {0}")]
    InvalidNecklaces(String),
    #[error("word `{word}` is not in the required class: {reason}")]
    WrongWordClass { word: String, reason: String },
    #[error("parameters do not match: {0}")]
    ParameterMismatch(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
