use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("list assignment: {0}")]
    BadLists(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {msg}")]
    Params { family: &'static str, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The input does not satisfy the hypothesis the algorithm needs.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A coloring handed to a procedure is not of the required shape.
    #[error("contract violated: {0}")]
    Contract(String),
    /// The input is outside what the algorithm covers (e.g. forests with k < 3).
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("step cap of {0} shifts exceeded")]
    StepCap(u64),
    /// A state the underlying theorem rules out. Carries a dump of the state.
    #[error("internal invariant failure: {message}\n{dump}")]
    Internal { message: String, dump: String },
}

impl SolveError {
    pub(crate) fn internal(message: impl Into<String>, dump: impl Into<String>) -> Self {
        SolveError::Internal { message: message.into(), dump: dump.into() }
    }
}
