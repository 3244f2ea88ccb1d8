use thiserror::Error;

/// Errors raised by the library. Variants map onto the CLI exit codes via
/// [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative input: {0}")]
    NegativeInput(String),
    #[error("not a rational square: {0}")]
    NotRationalSquare(String),
    #[error("malformed intersection array: {0}")]
    MalformedArray(String),
    #[error("negative a_{index} = {value}")]
    NegativeA { index: usize, value: i64 },
    #[error("acyclic parameters: no c_i > 1 and no a_i != 0")]
    AcyclicParameters,
    #[error("beta must be an integer less than -2, got {0}")]
    BetaOutOfRange(i64),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("non-real eigenvalue: only {found} of {expected} real roots isolated")]
    NonRealEigenvalue { found: usize, expected: usize },
    #[error("ambiguous precision: {0}")]
    AmbiguousPrecision(String),
    #[error("singular linear system")]
    Singular,
    #[error("non-integral intersection number {name} = {value}")]
    NonIntegral { name: String, value: String },
    #[error("excluded scalar: s* q^{0} = 1")]
    ExcludedScalar(u32),
    #[error("nonpositive parameter {name} = {value}")]
    Nonpositive { name: String, value: String },
    #[error("negative discriminant {0}: no real s*")]
    NegativeDiscriminant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported projective plane order {0}")]
    UnsupportedOrder(u32),
    #[error("graph with {requested} vertices exceeds size cap {cap}")]
    SizeCap { requested: u128, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not distance-regular: {0}")]
    NotDistanceRegular(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures that indicate a bug or a broken mathematical
    /// identity rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_) | Error::IdentityViolated(_) | Error::Singular
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
