use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol id {symbol} outside alphabet 1..={sigma}")]
    SymbolOutOfRange { symbol: u32, sigma: u32 },
    #[error("position {pos} outside 1..={n}")]
    PositionOutOfRange { pos: u32, n: u32 },
    #[error("position {0} is not the right end of a non-final interval")]
    NotABorder(u32),
    #[error("a Simon-Tree needs a non-empty word")]
    EmptyWord,
    #[error("brute force refused: word of length {len} exceeds the limit of {limit}")]
    OracleGuard { len: usize, limit: usize },
    #[error("tree must be transformed (singleton leaves duplicated) first")]
    NotTransformed,
}
