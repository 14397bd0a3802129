use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed face: {0}")]
    MalformedFace(String),

    #[error("not a face of the complex: {0}")]
    NotAFace(String),

    #[error("vertex `{0}` is already present")]
    VertexExists(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("complex is void (has no faces)")]
    Void,

    #[error("complex is not Cohen-Macaulay")]
    NotCohenMacaulay,

    #[error("not a homology ball: {0}")]
    NotABall(String),

    #[error("not a homology sphere: {0}")]
    NotASphere(String),

    #[error("base complex is not a simplex")]
    NotASimplex,

    #[error("polynomial of degree {degree} does not fit in window 0..={window}")]
    DegreeExceedsWindow { degree: usize, window: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("triangulations cannot be composed: {0}")]
    CompositionMismatch(String),

    #[error("invalid carrier map: {0}")]
    InvalidCarrier(String),

    #[error("{what}: routes disagree ({left} vs {right})")]
    Consistency {
        what: &'static str,
        left: String,
        right: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
