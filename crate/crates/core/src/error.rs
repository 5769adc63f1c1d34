//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is invalid: q must be even and at least 4")]
    InvalidAlphabet(u16),

    #[error("symbol {symbol} out of range for alphabet of size {q}")]
    SymbolOutOfRange { symbol: u16, q: u16 },

    #[error("words live over different alphabets (q={0} vs q={1})")]
    AlphabetMismatch(u16, u16),

    #[error("expected a word of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("cannot deinterleave a word of odd length {0}")]
    OddLength(usize),

    #[error("insertion position {position} out of range for word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("invalid channel event at index {index}: {reason}")]
    InvalidTrace { index: usize, reason: String },

    #[error("enumeration refused: would exceed the safety cap of {cap} words ({estimate})")]
    EnumerationCapExceeded { cap: u64, estimate: String },

    #[error("parameter {name}={value} outside the admissible range [0, {bound}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("word is not irreducible")]
    NotIrreducible,

    #[error("not a single-complementary-substitution corruption")]
    NotComplementarySubstitution,

    #[error("no candidate codeword found")]
    NoCandidate,

    #[error("{count} distinct candidate codewords: input is ambiguous")]
    AmbiguousCandidates { count: usize },

    #[error("signature length {sig_len} incompatible with code length {n}: not a valid channel output")]
    NotAChannelOutput { sig_len: usize, n: usize },

    #[error("uncorrectable input: decoded word fails code membership")]
    Uncorrectable,

    #[error("index {index} out of range for codebook of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("word is not in the codebook")]
    NotACodeword,

    #[error("cannot parse word {input:?}: {reason}")]
    WordParse { input: String, reason: String },

    #[error("malformed codebook file: {0}")]
    CodebookFormat(String),

    #[error("rate is undefined for an empty code")]
    EmptyCode,
}
