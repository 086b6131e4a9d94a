//! Exact invariant Dolbeault and holomorphic Poisson cohomology of
//! nilmanifolds with abelian complex structure.

pub mod catalog;
pub mod cli;
pub mod exterior;
pub mod format;
pub mod linear;
pub mod poisson;
pub mod scalar;
