use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Empty element text.
    Empty,
    /// A token that is not a nonnegative decimal integer.
    Malformed(String),
    /// An entry larger than the matrix size.
    ValueOutOfRange { value: usize, n: usize },
    /// A nonzero value appearing twice.
    DuplicateValue(usize),
    /// Size zero where a positive size is required.
    ZeroSize,
    /// Operands of different sizes.
    SizeMismatch { left: usize, right: usize },
    /// A 1-based index outside `1..=len`.
    IndexOutOfRange { index: usize, len: usize },
    /// The operation needs a permutation (full rank element).
    NotPermutation,
    /// A 0-1 matrix with two ones in a row or column, or wrong cell count.
    InvalidMatrix,
    /// Interval endpoints that are not comparable.
    Incomparable,
    /// Size outside the range an operation supports.
    UnsupportedSize { n: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => write!(f, "empty element"),
            Error::Malformed(tok) => write!(f, "malformed token `{tok}`"),
            Error::ValueOutOfRange { value, n } => {
                write!(f, "value {value} exceeds matrix size {n}")
            }
            Error::DuplicateValue(v) => write!(f, "duplicate nonzero value {v}"),
            Error::ZeroSize => write!(f, "size must be positive"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 1..={len}")
            }
            Error::NotPermutation => write!(f, "element is not a permutation"),
            Error::InvalidMatrix => write!(f, "not a rook matrix"),
            Error::Incomparable => write!(f, "interval endpoints are not comparable"),
            Error::UnsupportedSize { n, max } => {
                write!(f, "size {n} not supported (allowed 1..={max})")
            }
        }
    }
}

impl core::error::Error for Error {}
