use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("input is not a tree: {0}")]
    NotATree(String),

    #[error("vertex set is not an orbit of the automorphism group")]
    NotAnOrbit,

    #[error("group is not solvable")]
    NotSolvable,

    #[error("disjoint union requires at least one part")]
    EmptyUnion,

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("no fixed vertex and no fixed edge orbit found in tree")]
    NoAnchor,

    #[error("{what} exceeds cap of {limit} (got {actual})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unsupported parameter: {0}")]
    BadParameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to: 3 for exceeded search
    /// caps, 2 for every other (input) error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
