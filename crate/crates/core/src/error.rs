use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Matrix or subspace dimensions do not agree.
    Shape(String),
    /// A matrix expected to have full rank does not.
    RankDeficient(String),
    InvalidField(String),
    Parse(String),
    /// A word uses an inverse on a generator that is not invertible.
    NotInvertible(String),
    InvalidParameter(String),
    /// The relation spaces have not vanished below the requested cutoff.
    NotFiniteType { cutoff: usize },
    /// The algebra fails the Artin–Schelter regularity test.
    NotAsRegular(String),
    /// Grading requirement violated (weights or length-homogeneity).
    NotGraded(String),
    /// A computation needing characteristic zero was given a prime field.
    NeedsCharacteristicZero,
    /// An internal invariant failed; this indicates a bug.
    Invariant(String),
    /// Rewriting could not certify an identity within the pass cap.
    Inconclusive(String),
    Elimination(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(m) => write!(f, "shape mismatch: {m}"),
            Error::RankDeficient(m) => write!(f, "rank deficient: {m}"),
            Error::InvalidField(m) => write!(f, "invalid field: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::NotInvertible(m) => write!(f, "inverse of non-invertible generator: {m}"),
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {m}"),
            Error::NotFiniteType { cutoff } => write!(
                f,
                "relation space R_{cutoff} is nonzero; increase nmax or A is not of finite type"
            ),
            Error::NotAsRegular(m) => write!(f, "not Artin-Schelter regular: {m}"),
            Error::NotGraded(m) => write!(f, "grading violated: {m}"),
            Error::NeedsCharacteristicZero => {
                f.write_str("operation is only certified over the rationals")
            }
            Error::Invariant(m) => write!(f, "internal invariant violated: {m}"),
            Error::Inconclusive(m) => write!(f, "inconclusive: {m}"),
            Error::Elimination(m) => write!(f, "generator elimination failed: {m}"),
        }
    }
}

impl core::error::Error for Error {}
