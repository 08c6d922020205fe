use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("symbol {symbol} at position {position} is outside the alphabet [0, {sigma})")]
    SymbolOutOfRange {
        position: usize,
        symbol: u32,
        sigma: u32,
    },

    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("interval [{start}..{end}] is not valid for a text of length {n}")]
    IntervalOutOfRange { start: usize, end: usize, n: usize },

    #[error("input is not a Lyndon word")]
    NotLyndon,

    #[error("input length {len} exceeds the oracle limit of {limit}")]
    OracleLimit { len: usize, limit: usize },

    #[error("corpus of {count} strings exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },

    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
