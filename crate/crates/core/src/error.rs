use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation has a cycle: {x} <= {y} and {y} <= {x}")]
    Cycle { x: usize, y: usize },
    #[error("element {element} is not {role} (it is not comparable to {other} as required)")]
    Bounds { element: usize, role: &'static str, other: usize },
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("structure violates orthoposet laws: {0}")]
    Validation(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("horizontal sum of an empty family")]
    EmptyFamily,
    #[error("exhaustive enumeration to {requested} elements exceeds the feasibility limit of {limit}")]
    Feasibility { requested: usize, limit: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
