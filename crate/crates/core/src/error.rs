use thiserror::Error;

/// Errors reported by ring, matrix, and determinant operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown ring descriptor `{0}`")]
    UnknownDescriptor(String),

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(String),

    #[error("cannot parse `{text}` as an element of {ring}: {reason}")]
    ElementSyntax {
        ring: String,
        text: String,
        reason: String,
    },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("element does not belong to ring `{ring}`")]
    NotInRing { ring: String },

    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimMismatch(usize, usize, usize, usize),

    #[error("cannot multiply {0}x{1} by {2}x{3}: inner dimensions differ")]
    InnerDimMismatch(usize, usize, usize, usize),

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what} must be positive")]
    MustBePositive { what: &'static str },

    #[error("{what} requires size at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("images {0:?} are not a permutation of 0..n")]
    InvalidPermutation(Vec<usize>),

    #[error("transposition indices must be distinct (both are {0})")]
    EqualTranspositionIndices(usize),

    #[error("enumeration cap exceeded: n = {n} but cap = {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("tuple length {k} exceeds matrix size {n}")]
    TupleTooLong { k: usize, n: usize },

    #[error("line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },

    #[error("characteristic polynomial requires integer, rational, or residue entries, got `{ring}`")]
    UnsupportedBase { ring: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
