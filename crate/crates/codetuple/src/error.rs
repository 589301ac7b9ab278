use thiserror::Error;

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet needs at least two symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("a code-tuple needs at least one table")]
    EmptyTuple,
    #[error("table index {index} out of range for {tables} tables")]
    IndexOutOfRange { index: usize, tables: usize },
    #[error("table {table} is not total: expected {expected} entries, got {got}")]
    MissingSymbol {
        table: usize,
        expected: usize,
        got: usize,
    },
    #[error("cannot drop the first bit of the empty bit string")]
    EmptyBitString,
    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("probability of {0:?} must be positive")]
    NonPositiveProbability(String),
    #[error("probabilities sum to {0}, expected exactly 1")]
    ProbabilitySum(String),
    #[error("alphabets do not match")]
    AlphabetMismatch,
    #[error("forced bit of table {0} is undefined: the table can never emit output")]
    UndefinedForcedBit(usize),
    #[error("code-tuple is not extendable")]
    NotExtendable,
    #[error("no output fork found within a budget of {budget} forced bits")]
    NoForkFound { budget: usize },
    #[error("code-tuple is not {k}-bit delay decodable")]
    NotKDec { k: usize },
    #[error("the table-index chain has no unique stationary distribution")]
    NotRegular,
    #[error("no parse of the bit stream exists at offset {0}")]
    InvalidStream(usize),
    #[error("conflicting certified parses at offset {0}; the tuple is not decodable at this delay")]
    NotDecodable(usize),
    #[error("search space holds {count} tuples, above the cap of {cap}")]
    SpaceTooLarge { count: u128, cap: u128 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
