use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in incompatible rings.
    RingMismatch(String),
    DimensionMismatch { expected: usize, found: usize },
    DegreeBudget { degree: u32, budget: u32 },
    SingularMatrix,
    ZeroInput(String),
    NotHomogeneous,
    /// Input violates a documented precondition (exit status 2 in the CLI).
    Precondition(String),
    Parse { line: usize, column: usize, message: String },
    NotZeroDimensional,
    NotArtinian,
    SupportNotAtOrigin,
    UnknownExample(String),
    /// A cross-check that should never fail did.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch(s) => write!(f, "ring mismatch: {s}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DegreeBudget { degree, budget } => {
                write!(f, "degree {degree} exceeds the degree budget {budget}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::ZeroInput(s) => write!(f, "zero input: {s}"),
            Error::NotHomogeneous => write!(f, "input is not homogeneous"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            Error::NotZeroDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::NotArtinian => write!(f, "quotient is not finite-dimensional"),
            Error::SupportNotAtOrigin => write!(f, "ideal has points away from the origin"),
            Error::UnknownExample(s) => write!(f, "unknown example `{s}`"),
            Error::Internal(s) => write!(f, "internal consistency check failed: {s}"),
        }
    }
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl core::error::Error for Error {}
