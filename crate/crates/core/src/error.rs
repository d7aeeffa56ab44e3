use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("{what} exceeds search cap ({got} > {limit})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("partition is not equitable: {0}")]
    NotEquitable(String),

    #[error("no real root at or above {0}")]
    NoRoot(f64),

    #[error("no graph satisfies the constraints: {0}")]
    NoFreeGraph(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Self {
        Error::CapExceeded { what, limit, got }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
