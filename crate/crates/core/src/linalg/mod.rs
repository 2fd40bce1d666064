//! Exact scalars (rationals and prime fields), dense linear algebra over
//! them, and integer Smith normal form.

mod matrix;
mod scalar;
mod smith;
mod subspace;

pub use matrix::{
    add_vectors, is_zero_vector, scale_vector, sub_vectors, support_indices, unit_vector,
    zero_vector, Matrix, Vector,
};
pub use scalar::{Field, Scalar};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
    #[error("entries over {found} in a matrix over {expected}")]
    MixedFields { expected: Field, found: Field },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} has a different length from row 0")]
    Ragged { row: usize },
}
