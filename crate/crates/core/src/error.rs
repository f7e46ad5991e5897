//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order must be positive")]
    InvalidOrder,

    #[error("group exceeds the order cap of {cap}: reached {reached} elements")]
    GroupTooLarge { cap: usize, reached: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid group definition: {0}")]
    InvalidSpec(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("theta must lie in [0, pi), got {0}")]
    ThetaOutOfRange(f64),

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),

    #[error("matrix too ill-conditioned: condition estimate {cond:.3e}")]
    IllConditioned { cond: f64 },

    #[error("realizing matrix has non-real entry at ({row},{col}): imaginary part {imag:.3e}")]
    NonRealRealization { row: usize, col: usize, imag: f64 },

    #[error("scaling vector has a zero entry at index {index}")]
    NotTotallyNonzero { index: usize },

    #[error("character table is corrupt: {0}")]
    TableCorrupt(String),

    #[error("operation requires a real character table (max imaginary magnitude {max_imag:.3e})")]
    RealTableRequired { max_imag: f64 },

    #[error("unsupported dimension {n}")]
    UnsupportedDimension { n: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("group {0} is not abelian")]
    NotAbelian(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code a command should use when surfacing this error:
    /// 2 input error, 3 numerical failure, 4 unsupported operation.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            InvalidOrder | GroupTooLarge { .. } | InvalidPermutation(_) | NotAGroup(_)
            | InvalidSpec(_) | SizeMismatch(_) | LengthMismatch { .. } | ThetaOutOfRange(_)
            | IndexOutOfRange { .. } | NotTotallyNonzero { .. } | Io(_) => 2,
            NumericalDegeneracy(_) | IllConditioned { .. } | NonRealRealization { .. }
            | TableCorrupt(_) => 3,
            RealTableRequired { .. } | UnsupportedDimension { .. } | Unsupported(_)
            | NotAbelian(_) => 4,
        }
    }
}
