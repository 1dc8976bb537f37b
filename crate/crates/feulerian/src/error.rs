//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by the exact computation routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// Paired parameter lists have different lengths.
    LengthMismatch,
    /// Hypergeometric series has no terminating upper parameter.
    Divergent,
    /// A lower parameter hits a non-positive integer before termination.
    BottomPole(String),
    /// Parameter set violates a structural invariant.
    InvalidSpec(String),
    /// A transformation validity guard fails, e.g. (rho-eps-omega)_omega = 0.
    GuardViolation(String),
    /// Input polynomial has non-real zeros where real ones are required.
    NotRealRooted,
    /// Minor window is too small for the requested order.
    WindowTooSmall,
    /// Enumeration budget exceeded.
    BudgetExceeded(String),
    /// Stated precondition does not hold for the given inputs.
    Precondition(String),
    /// Malformed rational literal.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::LengthMismatch => write!(f, "parameter lists have different lengths"),
            Error::Divergent => write!(f, "no terminating upper parameter"),
            Error::BottomPole(s) => write!(f, "lower-parameter pole: {s}"),
            Error::InvalidSpec(s) => write!(f, "invalid spec: {s}"),
            Error::GuardViolation(s) => write!(f, "validity guard violated: {s}"),
            Error::NotRealRooted => write!(f, "polynomial has non-real zeros"),
            Error::WindowTooSmall => write!(f, "minor window smaller than requested order"),
            Error::BudgetExceeded(s) => write!(f, "budget exceeded: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
