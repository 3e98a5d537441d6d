use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The grid is too small for the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid bit word {word:?}: {reason}")]
    BitWord { word: String, reason: String },

    #[error("pattern line {line}: {message}")]
    Pattern { line: usize, message: String },

    #[error("integer overflow: {0}")]
    Overflow(String),

    /// Search space larger than the configured safety cap.
    #[error(
        "search space of {requested} designs exceeds the cap of {cap}; raise the cap to proceed"
    )]
    CapExceeded { requested: u128, cap: u64 },

    /// A decomposition found a vertex whose degree breaks the running-stitch law.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("snowflake construction invalid at order {order}: {reason}")]
    ConstructionInvalid { order: u32, reason: String },

    #[error("chart line {line}, column {column}: {message}")]
    ChartParse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("chart line {line}: row has {found} threads, expected width {expected}")]
    WidthMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("malformed chart: {0}")]
    Chart(String),

    #[error("unknown motif {name:?}; valid names: {}", valid.join(", "))]
    UnknownMotif { name: String, valid: Vec<String> },
}
