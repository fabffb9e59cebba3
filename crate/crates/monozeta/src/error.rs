use std::fmt;

/// Subset of coordinate axes, printed 1-indexed as `{1,3}` in diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetLabel(pub Vec<usize>);

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input text (polynomial source, JSON payloads). CLI exit code 2.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("convex_hull requires a non-empty point set")]
    EmptyPointSet,

    #[error("ambient dimension {0} exceeds the supported limit of 12")]
    DimensionTooLarge(usize),

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("functional {0} is unbounded over the polyhedron in the requested sense")]
    UnboundedDirection(String),

    #[error("face dimension {d} out of range for a body of dimension {dim}")]
    FaceDimOutOfRange { d: i64, dim: i64 },

    #[error(
        "condition (*) fails (Def 3.2) for S = {subset}: dim of the Newton polytope at \
         infinity restricted to S is {got}, but it must be 0 (the origin alone) or {want}"
    )]
    ConditionStar {
        subset: SubsetLabel,
        got: i64,
        want: usize,
    },

    /// A named Definition/Theorem hypothesis is violated by the input. CLI exit code 1.
    #[error("{0}")]
    Precondition(String),

    #[error("arithmetic overflow in {0}: inputs exceed the supported range")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code under the CLI contract: 2 for malformed input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}
