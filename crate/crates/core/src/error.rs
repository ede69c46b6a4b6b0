use thiserror::Error;

/// Everything that can go wrong while building or analysing groups and rings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {order} exceeds the size cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("{what} needs {needed} items, over the budget of {budget}")]
    BudgetExceeded {
        what: String,
        needed: u128,
        budget: usize,
    },

    #[error("cyclic factor {0} is smaller than 2")]
    BadFactor(u64),

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("empty table")]
    EmptyTable,

    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: u64 },

    #[error("index 0 is not an identity: 0+{x} or {x}+0 differs from {x}")]
    MissingIdentity { x: u32 },

    #[error("element {x} has no two-sided inverse")]
    MissingInverse { x: u32 },

    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NotLatin {
        line: &'static str,
        index: u32,
        value: u32,
    },

    #[error("non-associative: ({x}+{y})+{z} differs from {x}+({y}+{z})")]
    NonAssociative { x: u32, y: u32, z: u32 },

    #[error("group is not abelian")]
    NotAbelian,

    #[error("map has length {got}, group has order {expected}")]
    WrongLength { got: usize, expected: usize },

    #[error("map is not a homomorphism: fails at ({x}, {y})")]
    NotHomomorphism { x: u32, y: u32 },

    #[error("map is not an automorphism")]
    NotAutomorphism,

    #[error("pair is not image-commuting: first({x}) + second({y}) differs from second({y}) + first({x})")]
    NotImageCommuting { x: u32, y: u32 },

    #[error("interchange law fails at (w, x, y, z) = ({w}, {x}, {y}, {z})")]
    InterchangeViolation { w: u32, x: u32, y: u32, z: u32 },

    #[error("objects live over different groups")]
    GroupMismatch,

    #[error("endomorphism pair is not a commuting pair of idempotents")]
    NotCommutingIdempotents,

    #[error("group is not a direct sum of copies of one prime-power cyclic group")]
    NotElementaryAbelian,

    #[error("subset is not {what}: {reason}")]
    BadSubset { what: &'static str, reason: String },

    #[error("structural and exhaustive evaluation disagree on {0}")]
    PropertyMismatch(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
