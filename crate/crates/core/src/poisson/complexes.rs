//! Operator matrices of `∂̄`, `ad_Λ`, `∂̄_Λ` and the cohomologies they
//! define.

use super::{PoissonBivector, PoissonError};
use crate::exterior::StructureConstants;
use crate::linear::{BasisEnumeration, CohomologySpace, LinearError, OperatorMatrix};

/// `∂̄: B^{p,q} → B^{p,q+1}`.
pub fn dbar_matrix(
    sc: &StructureConstants,
    p: usize,
    q: usize,
) -> Result<OperatorMatrix, LinearError> {
    let n = sc.n();
    OperatorMatrix::of(
        &BasisEnumeration::bidegree(n, p, q),
        &BasisEnumeration::bidegree(n, p, q + 1),
        |x| sc.dbar(x),
    )
}

/// `ad_Λ: B^{p,q} → B^{p+1,q}`.
pub fn ad_lambda_matrix(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
    p: usize,
    q: usize,
) -> Result<OperatorMatrix, LinearError> {
    let n = sc.n();
    OperatorMatrix::of(
        &BasisEnumeration::bidegree(n, p, q),
        &BasisEnumeration::bidegree(n, p + 1, q),
        |x| lambda.ad(sc, x),
    )
}

/// `∂̄` on the total grade `k`.
pub fn dbar_total_matrix(sc: &StructureConstants, k: usize) -> Result<OperatorMatrix, LinearError> {
    let n = sc.n();
    OperatorMatrix::of(
        &BasisEnumeration::total(n, k),
        &BasisEnumeration::total(n, k + 1),
        |x| sc.dbar(x),
    )
}

/// `∂̄_Λ: ⊕_{p+q=k} B^{p,q} → ⊕_{p+q=k+1} B^{p,q}`.
pub fn dbar_lambda_matrix(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
    k: usize,
) -> Result<OperatorMatrix, LinearError> {
    let n = sc.n();
    OperatorMatrix::of(
        &BasisEnumeration::total(n, k),
        &BasisEnumeration::total(n, k + 1),
        |x| lambda.dbar_lambda(sc, x),
    )
}

/// The invariant Dolbeault cohomology `H^q(𝔤^{p,0})`.
pub fn dolbeault(
    sc: &StructureConstants,
    p: usize,
    q: usize,
) -> Result<CohomologySpace, PoissonError> {
    let outgoing = dbar_matrix(sc, p, q)?;
    let incoming = match q {
        0 => OperatorMatrix::from_columns(
            BasisEnumeration::bidegree(sc.n(), p, sc.n() + 1),
            outgoing.domain().clone(),
            Vec::new(),
        )?,
        _ => dbar_matrix(sc, p, q - 1)?,
    };
    Ok(CohomologySpace::between(&incoming, &outgoing)?)
}

/// `h^{p,q}` for `0 ≤ p, q ≤ n`, indexed `[p][q]`.
pub fn dolbeault_dimensions(sc: &StructureConstants) -> Result<Vec<Vec<usize>>, PoissonError> {
    (0..=sc.n())
        .map(|p| {
            (0..=sc.n())
                .map(|q| dolbeault(sc, p, q).map(|h| h.dimension()))
                .collect()
        })
        .collect()
}

/// All Dolbeault spaces, indexed `[p][q]`.
pub fn dolbeault_spaces(
    sc: &StructureConstants,
) -> Result<Vec<Vec<CohomologySpace>>, PoissonError> {
    (0..=sc.n())
        .map(|p| (0..=sc.n()).map(|q| dolbeault(sc, p, q)).collect())
        .collect()
}

/// The Poisson cohomology `H^k_Λ` of `∂̄_Λ` on the total complex.
pub fn poisson_cohomology(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
    k: usize,
) -> Result<CohomologySpace, PoissonError> {
    let outgoing = dbar_lambda_matrix(sc, lambda, k)?;
    let incoming = match k {
        0 => OperatorMatrix::from_columns(
            BasisEnumeration::total(sc.n(), 2 * sc.n() + 1),
            outgoing.domain().clone(),
            Vec::new(),
        )?,
        _ => dbar_lambda_matrix(sc, lambda, k - 1)?,
    };
    Ok(CohomologySpace::between(&incoming, &outgoing)?)
}

/// `dim H^k_Λ` for `0 ≤ k ≤ 2n`.
pub fn poisson_dimensions(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
) -> Result<Vec<usize>, PoissonError> {
    (0..=2 * sc.n())
        .map(|k| poisson_cohomology(sc, lambda, k).map(|h| h.dimension()))
        .collect()
}

/// `H^k_Λ` for `0 ≤ k ≤ 2n`.
pub fn poisson_spaces(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
) -> Result<Vec<CohomologySpace>, PoissonError> {
    (0..=2 * sc.n())
        .map(|k| poisson_cohomology(sc, lambda, k))
        .collect()
}
