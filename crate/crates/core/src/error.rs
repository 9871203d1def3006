use std::fmt;

/// Failure modes of the exact pipelines.
///
/// Dimension mismatches are programming errors and panic via `assert!`
/// instead of surfacing here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inversion of a ring element that is not a unit.
    NotInvertible,
    /// Reciprocal of a series whose constant term is not a unit.
    /// Raising this increments the division-violation counter.
    NonUnitConstantTerm,
    /// Partial evaluation index beyond the truncation order.
    IndexOutOfRange { index: usize, trunc: usize },
    /// Elimination hit a nonzero column with no pivot of unit constant
    /// term (series rings only: the structure is singular at z = 0).
    NoUnitPivot,
    /// Inverse of a singular matrix.
    SingularMatrix,
    /// The Hankel matrix of the projected sequence is singular, so the
    /// sequence admits no unique degree-n recurrence.
    SingularHankel,
    /// Every random projection produced a singular Hankel matrix. The
    /// minimal polynomial of the input has degree < n; division-free
    /// mode handles such inputs.
    DegenerateMinimalPolynomial { retries: u32 },
    /// The shifted Hankel matrix is not invertible, which over a field
    /// means det A = 0. Division-free mode handles singular inputs.
    NonInvertibleHA,
    /// A stage read series coefficients that an earlier scheduled
    /// partial evaluation collapsed.
    WatermarkViolation,
    /// Series matrix whose constant-coefficient matrix is singular.
    SingularLeadingMatrix,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::NonUnitConstantTerm => {
                write!(f, "series reciprocal requires a unit constant term")
            }
            Error::IndexOutOfRange { index, trunc } => {
                write!(f, "index {index} exceeds truncation order {trunc}")
            }
            Error::NoUnitPivot => write!(f, "no pivot with unit constant term"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::SingularHankel => write!(f, "Hankel matrix of the sequence is singular"),
            Error::DegenerateMinimalPolynomial { retries } => write!(
                f,
                "all {retries} random projections gave a singular Hankel matrix; \
                 the minimal polynomial has degree < n (use division-free mode)"
            ),
            Error::NonInvertibleHA => write!(
                f,
                "shifted Hankel matrix is singular (det A = 0); use division-free mode"
            ),
            Error::WatermarkViolation => {
                write!(f, "a collapsed series coefficient was read downstream")
            }
            Error::SingularLeadingMatrix => {
                write!(f, "constant coefficient matrix is singular")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
