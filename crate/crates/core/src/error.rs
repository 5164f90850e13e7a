use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("tuple has arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },

    #[error("element {element} is out of range for an alphabet of order {order}")]
    InvalidElement { element: u64, order: u64 },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("window mismatch: {0}")]
    WindowMismatch(String),

    #[error("local rule is not a homomorphism: {0}")]
    NotHomomorphism(String),

    /// Images of two distinct coordinate factors of a direct product must commute.
    #[error("images of coordinates {first} and {second} do not commute")]
    NonCommutingFactors { first: usize, second: usize },

    #[error("{what} exceeded the limit of {limit}; {hint}")]
    CapExceeded {
        what: String,
        limit: u64,
        hint: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, limit: u64, hint: impl Into<String>) -> Self {
        Error::CapExceeded {
            what: what.into(),
            limit,
            hint: hint.into(),
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
