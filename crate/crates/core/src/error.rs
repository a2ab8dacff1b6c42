use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero polynomial: {0}")]
    ZeroPolynomial(String),

    #[error("degree {requested} is too small: {component} has degree {degree}")]
    DegreeTooSmall { component: String, degree: i64, requested: i64 },

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("{0} is not linear in the requested variable")]
    NotLinear(String),

    #[error("root leaves Q(i)(t^Q) coefficient tower: {0}")]
    RootOutsideField(String),

    #[error("irreducible factor over Q(i) in {0}; extend S manually")]
    IrreducibleFactor(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
