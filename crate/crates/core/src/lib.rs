//! Exact-arithmetic combinatorics for interpolated lowest-weight categories.
//!
//! The crate computes, over exact rationals only:
//!
//! * Young-diagram arithmetic: transposes, contents, hooks, the admissible
//!   set `C_τ`, column-surgery cores `core_{(ν−s)}`, the insertion map `rec`,
//!   and the chain step `Γ(τ, s, l)` ([`partition`]);
//! * the integer-rank oracle: straight e-hook removal, classical cores and
//!   hook insertion, Verma-simplicity tests, block chains and graded Hom
//!   characters over `S_n` ([`classical`]);
//! * symmetric-function kernels: `S_n` character tables, Kronecker and
//!   reduced Kronecker coefficients, Schur specializations and truncated
//!   q-series ([`symfun`]);
//! * the `(c', ν)` parameter plane: lowest weights, the lines `L_{τ,μ,m}`,
//!   reducibility classification and finite/infinite length ([`params`]);
//! * q-characters of Verma and simple objects, resolutions with exact degree
//!   offsets, and degree lower bounds ([`cat_o`]).
//!
//! No floating point is used anywhere; all values are integers or
//! arbitrary-precision rationals.

pub mod cat_o;
pub mod classical;
pub mod error;
pub mod params;
pub mod partition;
pub mod selftest;
pub mod symfun;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Exact arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Exact arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
