use thiserror::Error;

/// Errors raised by matroid construction, kernelization, verification and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is out of range for a ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("element {0} appears more than once")]
    DuplicateElement(usize),

    #[error("element {0} is not in the ground set of the matroid")]
    NotInGroundSet(usize),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("normalization failed: {0}")]
    Normalization(String),

    #[error("class mismatch: {0}")]
    ClassMismatch(String),

    #[error("coverability contract violated: g(k) = {g} is below k = {k}")]
    Coverability { g: usize, k: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("lifted ground set would have {size} tuples, above the cap of {cap}")]
    LiftTooLarge { size: u128, cap: usize },

    #[error("round count overflows ({0}); pass an explicit round count")]
    RoundOverflow(String),

    #[error("ground set of size {size} is too large for exhaustive checking (max {max})")]
    GroundSetTooLarge { size: usize, max: usize },

    #[error("brute-force budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Budget refusals get their own exit code in the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_) | Error::GroundSetTooLarge { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
