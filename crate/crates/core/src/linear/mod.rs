//! Exact sparse linear algebra over `Q(i)`.
//!
//! Elimination always keeps a fully reduced row-echelon form, so kernels,
//! images and cohomology representatives depend only on the spans involved
//! and never on the order work was done in.

mod basis;
mod cohomology;
mod matrix;
mod sparse;

pub use basis::{BasisEnumeration, Grade};
pub use cohomology::CohomologySpace;
pub use matrix::{factorize_columns, Factorization, OperatorMatrix};
pub use sparse::{row_reduce, Echelon, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("{monomial} is not in {grade}")]
    OutsideGrade { monomial: String, grade: String },
    #[error("image of {monomial} is {image}, which leaves {codomain}")]
    OutsideCodomain {
        monomial: String,
        image: String,
        codomain: String,
    },
    #[error("not a complex: boundary {boundary} in {grade} is not a cycle")]
    NotAComplex { grade: String, boundary: String },
    #[error("{element} is not a cycle in {grade}")]
    NotACycle { grade: String, element: String },
    #[error("matrix shapes do not match")]
    ShapeMismatch,
}
