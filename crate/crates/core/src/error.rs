use thiserror::Error;

/// Errors produced by the construction, verification and code machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {symbol} at position {position} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfRange {
        position: usize,
        symbol: u32,
        alphabet_size: u64,
    },

    #[error("alphabet size must be positive")]
    EmptyAlphabet,

    #[error("alphabet of size {0} does not fit in 32-bit symbols")]
    AlphabetTooLarge(u128),

    #[error("sequences of length {left} and {right} cannot be compared position by position")]
    LengthMismatch { left: usize, right: usize },

    #[error("epsilon must be a rational strictly between 0 and 1, got {0}")]
    InvalidEpsilon(String),

    #[error("a synchronization string must be non-empty")]
    EmptyString,

    #[error("string of length {len} exceeds the verifier size guard of {limit}")]
    TooLong { len: usize, limit: usize },

    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),

    #[error("random tape entry {index} has value {value}, expected 1..={bound}")]
    CorruptTape {
        index: usize,
        value: u64,
        bound: u64,
    },

    #[error(
        "gave up after {resamples} resamples; interval [{start}, {end}] is still bad \
         (alphabet or window constant too small for this epsilon)"
    )]
    ResampleLimit {
        resamples: usize,
        start: usize,
        end: usize,
    },

    #[error("circle halves must have lengths ceil(n/2) and floor(n/2), got {first} and {second}")]
    InvalidSplit { first: usize, second: usize },

    #[error("epsilon mismatch between inputs: {0} vs {1}")]
    EpsilonMismatch(String, String),

    #[error("{what} failed verification at epsilon {epsilon}")]
    NotSynchronizing { what: &'static str, epsilon: String },

    #[error("field degree mismatch: {0} vs {1}")]
    DegreeMismatch(u8, u8),

    #[error("field degree {0} is not supported (1..=16)")]
    UnsupportedDegree(u8),

    #[error("value {value} is not an element of GF(2^{degree})")]
    NotAFieldElement { value: u32, degree: u8 },

    #[error("evaluation point {0} is repeated")]
    RepeatedEvaluationPoint(u32),

    #[error("message of length {message} needs at least as many evaluation points, got {points}")]
    TooFewEvaluationPoints { message: usize, points: usize },

    #[error("invalid block code: {0}")]
    InvalidCode(String),

    #[error("code space exhausted: found {found} of {target} codewords")]
    CodeSpaceExhausted { found: usize, target: usize },

    #[error("greedy search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("inner code has {inner} codewords but the outer alphabet has {outer} symbols")]
    InnerCodeTooSmall { inner: usize, outer: u64 },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("malformed input at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
