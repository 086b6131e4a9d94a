//! The invariant model of `∧•L`, `L = 𝔤^{1,0} ⊕ 𝔤^{*(0,1)}`.
//!
//! Elements are combinations of canonical monomials `V_I ∧ ω̄_J`. The
//! differential `∂̄` and the Schouten bracket are generated from the
//! structure constants of an ascending basis.

mod element;
mod monomial;
mod structure;


pub use element::Element;
pub use monomial::{Bidegree, Generator, Monomial, MAX_DIMENSION};
pub use structure::{DSquaredViolation, StructureConstants, ValidationReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("complex dimension {0} is outside 1..={MAX_DIMENSION}")]
    BadDimension(usize),
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate structure constant A^{j}_{{{k},{l}}}")]
    DuplicateEntry { j: usize, k: usize, l: usize },
    #[error("expected a combination of vectors V_k, got {0}")]
    NotAVector(String),
    #[error("the descending central series does not terminate")]
    NotNilpotent,
}
