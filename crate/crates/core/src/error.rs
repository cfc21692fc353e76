use thiserror::Error;

use crate::word::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty token")]
    EmptyToken,
    #[error("token `{0}` contains whitespace")]
    WhitespaceInToken(String),
    #[error("non-printable byte 0x{byte:02x} at position {position}")]
    NonPrintable { byte: u8, position: usize },
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("expected a single line")]
    MultipleLines,
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("symbol id {0} is outside the alphabet")]
    UnknownSymbol(Symbol),
}

/// Refusals from the exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("{estimated} factorisations to enumerate exceeds the budget of {budget}")]
    TooManyFactorisations { estimated: u128, budget: u128 },
    #[error("{universe} distinct k-factors exceeds the mask budget of {budget} bits")]
    UniverseTooLarge { universe: usize, budget: u32 },
    #[error("node budget of {budget} exhausted; best dimension found is {lower_bound}")]
    NodeBudgetExceeded {
        budget: u64,
        lower_bound: usize,
        witness: Vec<usize>,
    },
    #[error("width bound k must be positive")]
    ZeroWidth,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("malformed 3DM input: {0}")]
    Malformed(String),
    #[error("ground sets must be non-empty and of equal size (got {x}, {y}, {z})")]
    UnequalSets { x: usize, y: usize, z: usize },
    #[error("name `{0}` appears more than once in the ground sets")]
    DuplicateName(String),
    #[error("ground-set name `{0}` uses a reserved gadget prefix")]
    ReservedName(String),
    #[error("triple {0} is listed twice")]
    DuplicateTriple(usize),
    #[error("triple {index} names `{name}`, which is not in its ground set")]
    UnknownElement { index: usize, name: String },
    #[error("instance has no triples")]
    NoTriples,
    #[error("triple index {0} is out of range")]
    TripleOutOfRange(usize),
    #[error("triples {0} and {1} share an element")]
    NotAMatching(usize, usize),
    #[error("matching has {found} triples, expected {expected}")]
    WrongMatchingSize { found: usize, expected: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExperimentError {
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
