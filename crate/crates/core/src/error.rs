use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("malformed part {token:?}")]
    MalformedPart { token: String },

    #[error("part {value} is not positive")]
    NonPositivePart { value: i128 },

    #[error("parts are not weakly decreasing at position {position}")]
    NotDecreasing { position: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("cannot strip {requested} hooks from a shape with {available}")]
    HookCountOutOfRange { requested: usize, available: usize },

    #[error("hooks do not nest at index {index}")]
    NestingViolated { index: usize },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The oracle answered in a way no irreducible character can.
    #[error("oracle promise violated: {0}")]
    PromiseViolated(String),

    /// An internal consistency check backed by a combinatorial lemma failed.
    #[error("lemma contradiction: {0}")]
    LemmaViolation(String),

    #[error("the two partitions are equal")]
    IdenticalPartitions,

    #[error("n = {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}
