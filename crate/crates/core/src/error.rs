use thiserror::Error;

/// Errors produced by the library.
///
/// Variable indices carried by errors are zero-based, like every index in the
/// public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radix must satisfy 2 <= k <= 255, got {0}")]
    InvalidRadix(usize),
    #[error("table for k={k}, n={n} needs {expected} values, got {got}")]
    LengthMismatch {
        k: usize,
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("value {value} is not in Z_{k}")]
    ValueOutOfRange { value: usize, k: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointArity { expected: usize, got: usize },
    #[error("catalogue code {code} is out of range for k={k}, n={n}")]
    CodeOutOfRange { code: String, k: usize, n: usize },
    #[error("invalid catalogue code {0:?}")]
    InvalidCode(String),
    #[error("functions have different radices ({0} vs {1})")]
    RadixMismatch(usize, usize),
    #[error("variable x{} does not exist (n={n})", .index + 1)]
    VariableOutOfRange { index: usize, n: usize },
    #[error("variable x{} is not essential", .0 + 1)]
    NotEssential(usize),
    #[error("cannot identify x{} with itself", .0 + 1)]
    SameVariable(usize),
    #[error("arity gap needs at least two essential variables, got {0}")]
    GapUndefined(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ordering must be a permutation of the essential variables")]
    InvalidOrdering,
    #[error("{0}")]
    InvalidFamily(String),
    #[error("decomposition tree exceeds {0} nodes")]
    TreeTooLarge(usize),
    #[error("space P_{k}^{n} is too large to enumerate (limit {limit} functions)")]
    SpaceTooLarge { k: usize, n: usize, limit: u64 },
    #[error("matrix is not invertible over Z_{0}")]
    SingularMatrix(usize),
    #[error("affine map has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
