use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation string {0:?}")]
    InvalidPermutation(String),
    #[error("degree {0} is not supported (must be between 1 and 35)")]
    UnsupportedDegree(usize),
    #[error("generator {generator} is out of range for {system}")]
    GeneratorOutOfRange { generator: usize, system: String },
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("operation requires a type A element")]
    NotTypeA,
    #[error("group of order {0} is too large to enumerate")]
    GroupTooLarge(u128),
    #[error("mu(x, w) requires x < w")]
    NotBelow,
    #[error("invalid word {0:?}")]
    InvalidWord(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("minor size {size} exceeds matrix dimensions {rows}x{cols}")]
    MinorTooLarge { size: usize, rows: usize, cols: usize },
    #[error("point assigns {got} variables, chart has {expected}")]
    MissingAssignment { expected: usize, got: usize },
    #[error("rank condition ({a}, {b}) is out of range for n = {n}")]
    ConditionOutOfRange { a: usize, b: usize, n: usize },
    #[error("point does not lie on the Kashiwara-Saito variety")]
    NotOnVariety,
    #[error("sampling gave up after {0} degenerate draws")]
    SamplingExhausted(usize),
    #[error("slice chart has no 2x2 variable block at block ({0}, {1})")]
    LayoutMismatch(usize, usize),
    #[error("element {0} is not in the cell")]
    NotInCell(String),
}

pub type Result<T> = core::result::Result<T, Error>;
