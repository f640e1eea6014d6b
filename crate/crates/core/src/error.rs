//! Error type shared by the whole crate.
//!
//! Every fallible operation reports enough context to reproduce the failure:
//! variable names, exponents, weights.  Integrality violations are always
//! hard errors — they indicate a transcription or logic bug, never a
//! condition to recover from.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// All failure modes of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different variable sets.
    VarSetMismatch { left: String, right: String },
    /// A variable name was not found in the relevant variable set.
    UnknownVariable(String),
    /// A variable set was declared with a repeated name.
    DuplicateVariable(String),
    /// Division by the zero polynomial.
    DivisionByZero,
    /// The divisor does not divide the dividend in the Laurent ring.
    InexactDivision,
    /// A denominator's constant term vanishes, so no power-series expansion
    /// exists around the origin.
    ZeroConstantTerm,
    /// A denominator's constant term is not a pure number, so the series
    /// recurrence cannot divide by it.
    NonScalarConstantTerm,
    /// A coefficient was requested outside the truncation box.
    ExponentOutOfCaps { requested: Vec<i64>, caps: Vec<u32> },
    /// Two truncated series have incompatible truncation boxes.
    CapsMismatch,
    /// A quantity that must be an integer came out with a denominator.
    NonIntegralValue(String),
    /// A weight expected to be dominant (all labels >= 0) was not.
    NonDominantWeight([i64; 3]),
    /// A polynomial expected to have only non-negative exponents had a
    /// negative one.
    NegativeExponent { var: String, exponent: i64 },
    /// The eigenvalue of the sought character coincides with the eigenvalue
    /// of a lower ansatz monomial, so back-substitution cannot divide.
    EigenvalueCollision { target: [i64; 3], other: [i64; 3] },
    /// No closed-form generating function is tabulated for this weight.
    UnsupportedWeight([i64; 3]),
    /// The requested family/kind combination is not defined.
    UnknownKind(String),
    /// A text expression failed to parse.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarSetMismatch { left, right } => {
                write!(f, "variable sets differ: [{left}] vs [{right}]")
            }
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::DuplicateVariable(name) => write!(f, "duplicate variable `{name}`"),
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::InexactDivision => write!(f, "division is not exact in the Laurent ring"),
            Error::ZeroConstantTerm => {
                write!(
                    f,
                    "denominator has zero constant term; series undefined at the origin"
                )
            }
            Error::NonScalarConstantTerm => {
                write!(f, "denominator constant term is not a pure number")
            }
            Error::ExponentOutOfCaps { requested, caps } => {
                write!(f, "exponent {requested:?} outside truncation caps {caps:?}")
            }
            Error::CapsMismatch => write!(f, "truncated series have different truncation boxes"),
            Error::NonIntegralValue(what) => {
                write!(f, "expected an integer value but got {what}")
            }
            Error::NonDominantWeight(m) => {
                write!(f, "weight {m:?} is not dominant")
            }
            Error::NegativeExponent { var, exponent } => {
                write!(
                    f,
                    "negative exponent {exponent} on `{var}` where a polynomial is required"
                )
            }
            Error::EigenvalueCollision { target, other } => write!(
                f,
                "eigenvalue collision: weights {target:?} and {other:?} share an eigenvalue"
            ),
            Error::UnsupportedWeight(n) => {
                write!(f, "no tabulated generating function for weight {n:?}")
            }
            Error::UnknownKind(kind) => write!(f, "unknown kind `{kind}`"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
        }
    }
}

impl core::error::Error for Error {}
