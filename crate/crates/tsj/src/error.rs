use thiserror::Error;

/// Process exit codes used by the `tsj` binary.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("not a Jacobian semigroup ideal: matroid rank {rank} < {mu} minimal generators")]
    NotJacobian { mu: usize, rank: usize },

    #[error("oracle size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Validation(_) | Error::GuardExceeded(_) => EXIT_INPUT,
            Error::NotJacobian { .. } => EXIT_PRECONDITION,
            Error::Internal(_) => EXIT_INTERNAL,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
