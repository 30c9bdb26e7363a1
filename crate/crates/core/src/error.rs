use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into two broad groups which the command-line front end
/// maps onto distinct exit codes: malformed input text ([`Error::Parse`],
/// [`Error::Json`]) and everything else, which is a contract or typing
/// violation of some construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{op}: boundary mismatch, {left} vs {right}")]
    Boundary {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("table entry {value} at position {position} is out of range for codomain [{cod}]")]
    OutOfRange {
        position: usize,
        value: usize,
        cod: usize,
    },

    #[error("{what} index {index} out of range (bound {bound})")]
    BadIndex {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },

    #[error("unknown {what} `{name}`")]
    UnknownName { what: &'static str, name: String },

    #[error("cannot identify vertex `{left}` (size {left_size}) with `{right}` (size {right_size})")]
    LabelClash {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },

    #[error("type mismatch at sequential composite: {left} does not match {right}")]
    TypeMismatch { left: String, right: String },

    #[error("line {line}, column {column}: type mismatch at sequential composite: {left} does not match {right}")]
    TypeMismatchAt {
        line: usize,
        column: usize,
        left: String,
        right: String,
    },

    #[error("ill-formed: {0}")]
    IllFormed(String),

    #[error("alphabet: {0}")]
    Alphabet(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for errors caused by unreadable input text rather than by
    /// ill-typed content.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Json { .. })
    }

    pub(crate) fn boundary(op: &'static str, left: impl ToString, right: impl ToString) -> Self {
        Error::Boundary {
            op,
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: strip_position(e.to_string()),
        }
    }
}

// serde_json appends " at line L column C", which the variant already has.
fn strip_position(message: String) -> String {
    match message.rfind(" at line ") {
        Some(k) => message[..k].to_string(),
        None => message,
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
