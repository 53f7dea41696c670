use thiserror::Error;

/// Broad failure classes. The CLI maps these onto exit codes 2, 3 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Unsupported,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("set is not independent: vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("a module must be nonempty")]
    EmptyModule,
    #[error("sets differ in size: |A| = {a}, |B| = {b}")]
    SizeMismatch { a: usize, b: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed cotree: {0}")]
    MalformedCotree(String),
    #[error("instance has {n} vertices but the oracle cap is {cap}")]
    Capacity { n: usize, cap: usize },
    #[error("unsupported graph class: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Unsupported(_) => ErrorClass::Unsupported,
            Error::Internal(_) => ErrorClass::Internal,
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
