//! Exact ordinary character tables.
//!
//! Tables are computed with the Dixon–Schneider method: the central
//! characters are the common eigenvectors of the class matrices, found over a
//! prime field `F_ℓ` that contains all `exponent`-th roots of unity. Each
//! character value is then recovered exactly from the eigenvalue
//! multiplicities of the representing matrix, computed from the power map.

mod cyclotomic;
mod dixon;
pub mod modp;
mod table;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use dixon::{
    class_mult_coeffs, coefficients_are_class_functions, dixon_prime, next_dixon_prime,
    ClassCoefficients,
};
pub use table::{
    character_table, character_table_with_prime, verify_orthogonality, CharacterTable, ClassReport,
    TableReport,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error("lifted eigenvalue multiplicity out of range; the Dixon prime is too small")]
    LiftFailure,
    #[error("class matrices did not split into one-dimensional eigenspaces")]
    SplitFailure,
    #[error("{0} is not a valid Dixon prime for this group")]
    BadPrime(u64),
}
