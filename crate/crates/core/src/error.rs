use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed grid file: {0}")]
    Parse(String),
    #[error("expected {expected} entries in {field}, found {found}")]
    SizeMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{field} is not a permutation of 1..{n}: {detail}")]
    NotPermutation {
        field: &'static str,
        n: usize,
        detail: String,
    },
    #[error("X and O share cell ({column}, {row})")]
    MarkerCollision { column: usize, row: usize },
    #[error("grid size {0} is too small (need at least 2)")]
    TooSmall(usize),
    #[error("grid describes a link with {0} components, expected a knot")]
    MultiComponent(usize),

    #[error("commutation of {axis} {index} and {next} is illegal: marker spans interleave")]
    IllegalCommutation {
        axis: &'static str,
        index: usize,
        next: usize,
    },
    #[error("no {kind} destabilization pattern at cell ({column}, {row})")]
    NoSuchPattern {
        kind: String,
        column: usize,
        row: usize,
    },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("bad move script line {line}: {detail}")]
    Script { line: usize, detail: String },
    #[error("connected sum needs an X in the upper-right corner of the left grid and an O in the lower-left corner of the right grid")]
    CornerConditionUnmet,

    #[error("matrix dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("estimated slice of {estimated} generators exceeds the cap of {cap} (use --force to override)")]
    BudgetExceeded { estimated: u128, cap: usize },
    #[error("inexact polynomial division: {0}")]
    DivisionInexact(String),
    #[error("Alexander polynomial is not symmetric: {0}")]
    AsymmetricResult(String),
    #[error("chain is not a cycle in the {0} complex")]
    NotACycle(&'static str),
    #[error("self-linking numbers differ: {0} vs {1}")]
    SlMismatch(i64, i64),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        }
    }
}
