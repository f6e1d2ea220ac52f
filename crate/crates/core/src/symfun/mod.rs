//! Symmetric-function engine: characters, Kronecker coefficients, Schur
//! specializations and truncated q-series arithmetic.

pub mod chartab;
pub mod qseries;
pub mod schur;

pub use chartab::{
    character_table, character_table_capped, chi, chi_row, class_data, kronecker,
    reduced_kronecker, reduced_kronecker_capped, z_of, CharTable, ClassData,
    DEFAULT_STABILIZATION_CAP, DEFAULT_TABLE_MAX,
};
pub use qseries::{euler_product, partition_gf, QSeries};
pub use schur::{schur_bar, schur_finite, schur_principal};
