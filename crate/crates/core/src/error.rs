use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    Scalar(String),

    #[error("line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("expected an element of degree {expected}, found degree {found}")]
    WrongDegree { expected: i64, found: i64 },

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("d^2 != 0 starting in degree {0}")]
    DSquaredNonzero(i64),

    #[error("map does not commute with the differentials in degree {0}")]
    NotChainMap(i64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("element is not Maurer-Cartan: {0}")]
    NotMaurerCartan(String),

    #[error("algebra is not graded commutative: {0}")]
    NotCommutative(String),

    #[error("algebra has no {0}")]
    Missing(&'static str),

    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch { expected: String, found: String },

    #[error("t-degree bound {bound} exceeded (needed {needed})")]
    TruncationTooSmall { bound: usize, needed: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("bad element expression `{expr}`: {message}")]
    Expression { expr: String, message: String },
}
