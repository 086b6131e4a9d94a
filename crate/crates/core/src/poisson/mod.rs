//! The canonical holomorphic Poisson structure `Λ = V_n ∧ V_{n-1}` and the
//! machinery around it: twisted cohomology, the `d₁` page, potential
//! vectors, the lift `φ`, and checkers for the degeneracy, isomorphism and
//! Gerstenhaber-morphism statements.

mod bivector;
mod checks;
mod complexes;
mod d1;
mod potential;

pub use bivector::PoissonBivector;
pub use checks::{
    check_degeneracy, check_gerstenhaber_condition, gerstenhaber_discrepancies,
    verify_gerstenhaber_morphism, verify_phi_isomorphism, DegeneracyReport, Discrepancy,
    MorphismReport, Operation, PhiIsoReport, PhiIsoRow,
};
pub use complexes::{
    ad_lambda_matrix, dbar_lambda_matrix, dbar_matrix, dbar_total_matrix, dolbeault,
    dolbeault_dimensions, dolbeault_spaces, poisson_cohomology, poisson_dimensions, poisson_spaces,
};
pub use d1::{d1_page, D1Block, D1Page, D1Witness};
pub use potential::{
    characterization_solution, decompose_omega_n, normative_solution, phi_lift, solve_potential,
    OmegaNDecomposition, PotentialVector,
};

use thiserror::Error;

use crate::exterior::ExteriorError;
use crate::linear::LinearError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PoissonError {
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("canonical Poisson structure undefined for n = {0}; it needs n >= 2")]
    CanonicalUndefined(usize),
    #[error("{0} is not of bidegree (2,0)")]
    NotABivector(String),
    #[error("[Λ, Λ] does not vanish for Λ = {0}")]
    NotPoisson(String),
    #[error("∂̄Λ does not vanish for Λ = {0}")]
    NotHolomorphic(String),
    #[error("φ undefined without potential vector")]
    NoPotential,
    #[error("{0} is not ∂̄-closed")]
    NotClosed(String),
    #[error("lift {lift} of {input} is not ∂̄_Λ-closed")]
    LiftNotClosed { input: String, lift: String },
    #[error("potential solvers disagree: characterization gives {characterization}, ∂̄X = ad_Λω̄^n gives {normative}")]
    PotentialMismatch {
        characterization: String,
        normative: String,
    },
    #[error(
        "degeneracy mismatch: d₁ vanishes = {d1_vanishes}, potential exists = {potential_exists}"
    )]
    DegeneracyMismatch {
        d1_vanishes: bool,
        potential_exists: bool,
    },
    #[error("φ is not an isomorphism in degree {k}: {detail}")]
    PhiIsomorphism { k: usize, detail: String },
    #[error("ad_X does not annihilate ω̄^{k} for X = {potential}")]
    ConditionNotMet { potential: String, k: usize },
    #[error("φ fails to respect the {0}")]
    MorphismFailed(Box<checks::Discrepancy>),
}
