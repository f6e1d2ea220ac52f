//! Domain errors shared across the crate.

use std::fmt;

/// Error cases surfaced by the library.
///
/// Most operations are total; the variants below cover the documented
/// partial ones (admissibility of `s`, regime bounds, size mismatches,
/// configured caps).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `s` has no witness column in `C_τ`.
    SNotInCSet { s: i64 },
    /// `Γ(τ, s, l)` requested with `l` below `−τˇ_{j_s}`.
    LBelowRange { l: i64, min: i64 },
    /// `tilde(λ, n)` with `n < λ_1 + |λ|`.
    NTooSmall { n: u64, min: u64 },
    /// A classical-case precondition (`n > 2s`, `n > 3`, `e > |β|`, ...) failed.
    RegimeViolated(String),
    /// Partition sizes do not match the operation's requirement.
    SizeMismatch(String),
    /// Full character table requested above the configured maximum.
    TableTooLarge { n: u32, max: u32 },
    /// Reduced Kronecker stabilization did not occur below the configured cap.
    StabilizationCap { cap: u32 },
    /// `c' = 0` was supplied where a nonzero value is required.
    ZeroCPrime,
    /// `ν` must not be a nonnegative integer for exact parameter points.
    IntegerNu,
    /// The two diagrams must be distinct.
    EqualDiagrams,
    /// An empty line (`μ = τ`, `m > 0`) cannot be intersected.
    EmptyLine,
    /// Power-series division by a series with zero constant term.
    DivisorNotUnit,
    /// `resolution` called with `sign(r)` not matching the requested sign.
    SignMismatch,
    /// The parameter point kind is not accepted by this operation.
    UnsupportedPoint(String),
    /// Malformed partition data (increasing parts, zero part, oversized input).
    InvalidPartition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SNotInCSet { s } => write!(f, "s = {s} is not in C_tau"),
            Error::LBelowRange { l, min } => {
                write!(f, "l = {l} is below the admissible minimum {min}")
            }
            Error::NTooSmall { n, min } => {
                write!(f, "n = {n} is too small (need n >= {min})")
            }
            Error::RegimeViolated(msg) => write!(f, "regime violated: {msg}"),
            Error::SizeMismatch(msg) => write!(f, "size mismatch: {msg}"),
            Error::TableTooLarge { n, max } => {
                write!(
                    f,
                    "character table for n = {n} above configured maximum {max}"
                )
            }
            Error::StabilizationCap { cap } => {
                write!(f, "stabilization cap exceeded (cap = {cap})")
            }
            Error::ZeroCPrime => write!(f, "c' must be nonzero"),
            Error::IntegerNu => write!(f, "nu must not be a nonnegative integer"),
            Error::EqualDiagrams => write!(f, "the diagrams mu and tau must be distinct"),
            Error::EmptyLine => write!(f, "empty line input"),
            Error::DivisorNotUnit => {
                write!(
                    f,
                    "series division requires a nonzero constant term in the divisor"
                )
            }
            Error::SignMismatch => write!(f, "sign of r does not match the requested direction"),
            Error::UnsupportedPoint(msg) => write!(f, "unsupported parameter point: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
